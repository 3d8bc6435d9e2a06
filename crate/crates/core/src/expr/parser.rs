use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::poly::{BigRat, MultiPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown name `{name}` at byte {offset}")]
    UnknownName { name: String, offset: usize },
    #[error("negative exponent at byte {offset}")]
    NegativeExponent { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownName { offset, .. }
            | ParseError::NegativeExponent { offset } => *offset,
        }
    }
}

/// Names bound to polynomials, visible to the parser.
pub trait Scope {
    fn lookup(&self, name: &str) -> Option<&MultiPoly>;
}

impl Scope for () {
    fn lookup(&self, _: &str) -> Option<&MultiPoly> {
        None
    }
}

impl Scope for HashMap<String, MultiPoly> {
    fn lookup(&self, name: &str) -> Option<&MultiPoly> {
        self.get(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("name `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, S: Scope + ?Sized> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    scope: &'a S,
}

impl<S: Scope + ?Sized> Parser<'_, S> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    return self.error("expected an operator; multiplication needs an explicit `*`");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(n), off) => {
                if *self.peek() == Tok::Slash {
                    return self.error("fractional exponents are not allowed");
                }
                let e = n.to_u32().ok_or_else(|| ParseError::Syntax {
                    offset: off,
                    message: "exponent too large".into(),
                })?;
                Ok(base.pow(e))
            }
            (Tok::Minus, off) => Err(ParseError::NegativeExponent { offset: off }),
            (t, off) => Err(ParseError::Syntax {
                offset: off,
                message: format!("expected an exponent, found {}", describe(&t)),
            }),
        }
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        match self.bump() {
            (Tok::Int(n), _) => {
                if *self.peek() != Tok::Slash {
                    return Ok(MultiPoly::constant(BigRat::from_integer(n)));
                }
                self.bump();
                match self.bump() {
                    (Tok::Int(d), off) => {
                        if d.is_zero() {
                            return Err(ParseError::Syntax {
                                offset: off,
                                message: "zero denominator".into(),
                            });
                        }
                        Ok(MultiPoly::constant(BigRat::new(n, d)))
                    }
                    (t, off) => Err(ParseError::Syntax {
                        offset: off,
                        message: format!("only integer literals may follow `/`, found {}", describe(&t)),
                    }),
                }
            }
            (Tok::Ident(name), off) => {
                if let Some(v) = VarId::from_name(&name) {
                    return Ok(MultiPoly::var(v));
                }
                match self.scope.lookup(&name) {
                    Some(p) => Ok(p.clone()),
                    None => Err(ParseError::UnknownName { name, offset: off }),
                }
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, off) => Err(ParseError::Syntax {
                        offset: off,
                        message: format!("expected `)`, found {}", describe(&t)),
                    }),
                }
            }
            (t, off) => Err(ParseError::Syntax {
                offset: off,
                message: format!("expected a number, name or `(`, found {}", describe(&t)),
            }),
        }
    }
}

/// Parses an expression with names resolved in `scope`.
pub fn parse<S: Scope + ?Sized>(text: &str, scope: &S) -> Result<MultiPoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, scope };
    let value = p.expr()?;
    match p.peek() {
        Tok::End => Ok(value),
        Tok::RParen => p.error("unbalanced `)`"),
        t => {
            let msg = format!("unexpected {}", describe(t));
            p.error(msg)
        }
    }
}

/// Parses a single product `['-'] factor ('*' factor)*` and keeps the
/// factors apart as `(base, exponent)` pairs. A leading minus becomes a
/// `-1` factor.
pub fn parse_product<S: Scope + ?Sized>(text: &str, scope: &S) -> Result<Vec<(MultiPoly, u32)>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, scope };
    let mut out = Vec::new();
    if *p.peek() == Tok::Minus {
        p.bump();
        out.push((MultiPoly::from_i64(-1), 1));
    }
    loop {
        let base = p.base()?;
        let mut e = 1;
        if *p.peek() == Tok::Caret {
            p.bump();
            match p.bump() {
                (Tok::Int(n), off) => {
                    e = n.to_u32().ok_or_else(|| ParseError::Syntax {
                        offset: off,
                        message: "exponent too large".into(),
                    })?;
                }
                (Tok::Minus, off) => return Err(ParseError::NegativeExponent { offset: off }),
                (t, off) => {
                    return Err(ParseError::Syntax {
                        offset: off,
                        message: format!("expected an exponent, found {}", describe(&t)),
                    })
                }
            }
        }
        out.push((base, e));
        match p.peek() {
            Tok::Star => {
                p.bump();
            }
            Tok::End => return Ok(out),
            t => {
                let msg = format!("expected `*` or end of a product, found {}", describe(t));
                return p.error(msg);
            }
        }
    }
}

/// Parses an expression that may only mention registry variables.
pub fn parse_poly(text: &str) -> Result<MultiPoly, ParseError> {
    parse(text, &())
}
