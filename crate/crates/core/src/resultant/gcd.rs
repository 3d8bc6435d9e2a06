use num_integer::Integer;

use super::ResultantError;
use crate::poly::{IntPoly, MultiPoly, VarId};

/// Greatest common divisor with respect to a main variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    /// Primitive integer polynomial with positive leading coefficient.
    pub gcd: MultiPoly,
    /// `a / gcd`, exact.
    pub cofactor_a: MultiPoly,
    /// `b / gcd`, exact.
    pub cofactor_b: MultiPoly,
    /// Degrees of the cofactors in the main variable.
    pub cofactor_degrees: (u32, u32),
}

/// Subresultant gcd of `a` and `b` as polynomials in `v`, with the content
/// in the remaining variables handled recursively.
///
/// The returned gcd is only determined up to a rational unit; it is made a
/// primitive integer polynomial with positive leading coefficient.
pub fn gcd_subresultant(a: &MultiPoly, b: &MultiPoly, v: VarId) -> Result<GcdResult, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let (_, ai) = a.integer_primitive();
    let (_, bi) = b.integer_primitive();
    let g = gcd_main(&ai, &bi, Some(v)).to_rational();
    let cofactor_a = a.exact_div(&g).expect("gcd divides its first argument");
    let cofactor_b = b.exact_div(&g).expect("gcd divides its second argument");
    Ok(GcdResult {
        cofactor_degrees: (cofactor_a.degree(v), cofactor_b.degree(v)),
        gcd: g,
        cofactor_a,
        cofactor_b,
    })
}

/// Full gcd of two integer polynomials, primitive with positive leading
/// coefficient; `gcd(0, 0) = 0`.
pub fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    gcd_main(a, b, None)
}

/// Rational-coefficient gcd normalized as in [`gcd_int`].
pub fn gcd_rational(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (_, ai) = a.integer_primitive();
    let (_, bi) = b.integer_primitive();
    gcd_int(&ai, &bi).to_rational()
}

fn normalize(p: IntPoly) -> IntPoly {
    p.primitive_part()
}

fn constant_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    // Only the integer content of each side can survive.
    let g = a.content().gcd(&b.content());
    IntPoly::constant(g)
}

fn gcd_main(a: &IntPoly, b: &IntPoly, main: Option<VarId>) -> IntPoly {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return constant_gcd(a, b);
    }
    let v = match main {
        Some(v) if a.contains_var(v) || b.contains_var(v) => v,
        _ => pick_variable(a, b),
    };
    if !a.contains_var(v) {
        return gcd_main(a, &content_in(b, v), None);
    }
    if !b.contains_var(v) {
        return gcd_main(&content_in(a, v), b, None);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cont = gcd_main(&ca, &cb, None);
    let prs = subresultant_last(&pa, &pb, v);
    let g = if prs.degree(v) == 0 {
        IntPoly::one()
    } else {
        let c = content_in(&prs, v);
        prs.exact_div(&c).expect("content divides")
    };
    normalize(g.mul(&cont))
}

/// The variable of smallest positive maximal degree, preferring registry order.
fn pick_variable(a: &IntPoly, b: &IntPoly) -> VarId {
    VarId::ALL
        .into_iter()
        .filter(|&v| a.contains_var(v) || b.contains_var(v))
        .min_by_key(|&v| a.degree(v).max(b.degree(v)))
        .expect("non-constant input")
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &IntPoly, v: VarId) -> IntPoly {
    let mut coeffs: Vec<IntPoly> = p.to_univariate(v).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = IntPoly::zero();
    for c in coeffs {
        g = gcd_main(&g, &c, None);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        IntPoly::one()
    } else {
        g
    }
}

/// Last nonzero element of the subresultant remainder sequence.
fn subresultant_last(a: &IntPoly, b: &IntPoly, v: VarId) -> IntPoly {
    let (mut a, mut b) = if a.degree(v) >= b.degree(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut g = IntPoly::one();
    let mut h = IntPoly::one();
    loop {
        let d = a.degree(v) - b.degree(v);
        let r = a.pseudo_remainder(&b, v).expect("nonzero divisor");
        if r.is_zero() {
            return b;
        }
        if r.degree(v) == 0 {
            return IntPoly::one();
        }
        let divisor = g.mul(&h.pow(d));
        a = b;
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        g = a.leading_coefficient_in(v);
        h = if d == 0 {
            h
        } else {
            g.pow(d).exact_div(&h.pow(d - 1)).expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cst, x};
    use VarId::*;

    #[test]
    fn univariate_common_factor() {
        let a = (x(K) - cst(1)) * (x(K) + cst(2));
        let b = (x(K) - cst(1)) * (x(K) + cst(3));
        let r = gcd_subresultant(&a, &b, K).unwrap();
        assert_eq!(r.gcd, x(K) - cst(1));
        assert_eq!(r.cofactor_degrees, (1, 1));
    }

    #[test]
    fn self_gcd_is_primitive_part() {
        let p = cst(6) * (x(F) * x(K) - cst(2) * x(C)) * (x(K) + x(F));
        let r = gcd_subresultant(&p, &p, K).unwrap();
        assert_eq!(r.gcd, p.scale(&crate::poly::ratio(1, 6)));
    }

    #[test]
    fn multivariate_with_content() {
        let common = x(F) * x(K) + x(C) * x(F) - cst(3);
        let a = &common * (x(F) + cst(1)) * (x(C) - x(K));
        let b = &common * (x(F) + cst(1)) * (x(K).pow(2) + x(C));
        let r = gcd_subresultant(&a, &b, K).unwrap();
        assert_eq!(r.gcd, (&common * (x(F) + cst(1))).monic());
    }

    #[test]
    fn coprime_is_one() {
        let a = x(K).pow(2) + x(F);
        let b = x(K) + x(C);
        assert!(gcd_subresultant(&a, &b, K).unwrap().gcd.is_one());
    }
}
