use std::collections::HashMap;
use std::fmt::Write;

use super::parser::{parse, ParseError, Scope};
use crate::poly::{MultiPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifestError {
    #[error("line {line}: `{name}` is already defined")]
    DuplicateName { name: String, line: usize },
    #[error("line {line}: `{name}` is used before it is defined")]
    ForwardReference { name: String, line: usize },
    #[error("line {line}: `{name}` is a reserved variable name")]
    ReservedName { name: String, line: usize },
    #[error("line {line}: expected `name := expression`")]
    MalformedLine { line: usize },
    #[error("line {line}: {source}")]
    Syntax {
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// One `name := expression` binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub text: String,
    pub value: MultiPoly,
    /// One-based line number in the source.
    pub line: usize,
}

/// Ordered list of bindings; later entries may refer to earlier ones.
#[derive(Debug, Clone, Default)]
pub struct Manifest {
    bindings: Vec<Binding>,
    index: HashMap<String, usize>,
}

impl Scope for Manifest {
    fn lookup(&self, name: &str) -> Option<&MultiPoly> {
        self.get(name)
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Manifest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bindings(&self) -> &[Binding] {
        &self.bindings
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&MultiPoly> {
        self.index.get(name).map(|&i| &self.bindings[i].value)
    }

    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.index.get(name).map(|&i| &self.bindings[i])
    }

    /// Parses `text` against the current bindings and appends it as `name`.
    pub fn define(&mut self, name: &str, text: &str, line: usize) -> Result<&MultiPoly, ManifestError> {
        if VarId::from_name(name).is_some() {
            return Err(ManifestError::ReservedName {
                name: name.to_string(),
                line,
            });
        }
        if !valid_name(name) {
            return Err(ManifestError::MalformedLine { line });
        }
        if self.index.contains_key(name) {
            return Err(ManifestError::DuplicateName {
                name: name.to_string(),
                line,
            });
        }
        let value = parse(text, self).map_err(|e| match e {
            ParseError::UnknownName { name, .. } => ManifestError::ForwardReference { name, line },
            source => ManifestError::Syntax { line, source },
        })?;
        self.index.insert(name.to_string(), self.bindings.len());
        self.bindings.push(Binding {
            name: name.to_string(),
            text: text.to_string(),
            value,
            line,
        });
        Ok(&self.bindings.last().unwrap().value)
    }

    /// Text form that [`load_manifest`] reads back to the same bindings.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for b in &self.bindings {
            writeln!(out, "{} := {}", b.name, b.text).unwrap();
        }
        out
    }
}

/// Loads `name := expr` lines; blank lines and `#` comments are skipped.
pub fn load_manifest(text: &str) -> Result<Manifest, ManifestError> {
    let mut m = Manifest::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (name, expr) = content
            .split_once(":=")
            .ok_or(ManifestError::MalformedLine { line })?;
        m.define(name.trim(), expr.trim(), line)?;
    }
    Ok(m)
}
