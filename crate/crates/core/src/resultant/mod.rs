//! Elimination: Sylvester resultants and subresultant gcd.

mod bareiss;
mod gcd;
mod interp;
mod sylvester;

use num_bigint::BigInt;

pub use bareiss::{bareiss_det, DetRing};
pub use gcd::{gcd_int, gcd_rational, gcd_subresultant, GcdResult};
pub use interp::{resultant_interp, resultant_interp_with, InterpOptions};
pub use sylvester::SylvesterMatrix;

use crate::poly::{BigRat, Coefficient, IntPoly, MultiPoly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResultantError {
    #[error("resultant input is the zero polynomial")]
    ZeroInput,
    #[error("both inputs are free of the elimination variable")]
    BothConstant,
    #[error("variable `{0}` is neither the elimination variable nor the spectator")]
    NotBivariate(VarId),
    #[error("only {found} of {needed} usable sample points found")]
    InsufficientSamples { needed: usize, found: usize },
    #[error("interpolated resultant failed the extra-point check")]
    GuardMismatch,
    #[error("deadline exceeded")]
    Timeout,
}

/// `sa^db * sb^da`, the factor removed by clearing integer content.
pub(crate) fn content_scale(sa: &BigRat, sb: &BigRat, da: u32, db: u32) -> BigRat {
    Coefficient::pow(sa, db) * Coefficient::pow(sb, da)
}

/// Resultant of `a` and `b` with respect to `var` by Bareiss elimination of
/// the Sylvester matrix over the integer polynomial ring.
///
/// Two `var`-free inputs give `1`; a `var`-free `a` against `b` of degree
/// `n` gives `a^n`.
pub fn resultant(a: &MultiPoly, b: &MultiPoly, var: VarId) -> Result<MultiPoly, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let (sa, ai) = a.integer_primitive();
    let (sb, bi) = b.integer_primitive();
    let da = ai.degree(var);
    let db = bi.degree(var);
    if da == 0 && db == 0 {
        return Ok(MultiPoly::one());
    }
    let det = resultant_int(&ai, &bi, var)?;
    Ok(det.to_rational().scale(&content_scale(&sa, &sb, da, db)))
}

/// Sylvester determinant over the integers, no content handling.
pub fn resultant_int(a: &IntPoly, b: &IntPoly, var: VarId) -> Result<IntPoly, ResultantError> {
    let s = SylvesterMatrix::<BigInt>::new(a, b, var)?;
    Ok(bareiss_det(&s.rows, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cst, ratio, x, VarId::*};

    #[test]
    fn small_resultants() {
        let r = resultant(&(x(K) - cst(2)), &(x(K) - cst(5)), K).unwrap();
        assert_eq!(r, cst(-3));
        let z = resultant(&(x(K).pow(2) - cst(1)), &(x(K) - cst(1)), K).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn constant_conventions() {
        assert_eq!(resultant(&x(F), &x(C), K).unwrap(), cst(1));
        let a = cst(3) * x(F);
        let b = x(K).pow(4) + x(C);
        assert_eq!(resultant(&a, &b, K).unwrap(), a.pow(4));
        assert_eq!(
            resultant(&MultiPoly::zero(), &b, K),
            Err(ResultantError::ZeroInput)
        );
    }

    #[test]
    fn rational_content_is_restored() {
        let a = x(K).scale(&ratio(3, 2)) - cst(1);
        let b = x(K).pow(2).scale(&ratio(1, 4)) + x(F);
        // Res = lc(a)^2 * b(2/3)
        let want = (MultiPoly::constant(ratio(1, 9)) + x(F)).scale(&ratio(9, 4));
        assert_eq!(resultant(&a, &b, K).unwrap(), want);
    }
}
