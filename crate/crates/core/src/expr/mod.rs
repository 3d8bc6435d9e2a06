//! Expression grammar: parsing, canonical printing and manifests.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint | uint '/' uint | name | '(' expr ')'
//! ```

mod format;
mod manifest;
mod parser;

pub use format::format;
pub use manifest::{load_manifest, Binding, Manifest, ManifestError};
pub use parser::{parse, parse_poly, parse_product, ParseError, Scope};
