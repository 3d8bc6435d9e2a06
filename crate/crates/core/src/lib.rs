//! Exact polynomial algebra and elimination for the classification of
//! biharmonic hypersurfaces with three distinct principal curvatures.
//!
//! * [`poly`]: sparse multivariate polynomials over the rationals and
//!   reduced rational functions.
//! * [`expr`]: text grammar, canonical printing and manifests of named
//!   polynomials.
//! * [`resultant`]: Sylvester resultants (fraction-free and by
//!   evaluation/interpolation) and subresultant gcd.
//! * [`catalog`]: the named polynomials of the classification and the exact
//!   checks built on them.
//! * [`sweep`]: parameter sweeps of resultants and their reports.

pub mod catalog;
pub mod expr;
pub mod poly;
pub mod resultant;
pub mod sweep;
