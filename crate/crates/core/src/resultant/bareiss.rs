use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::{Coefficient, Poly};

fn int_exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    Coefficient::exact_div(a, b)
}

/// Integral domain with exact division, as needed by fraction-free
/// elimination.
pub trait DetRing: Clone + Send + Sync {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Exact quotient; panics if the division is not exact.
    fn ring_div_exact(&self, other: &Self) -> Self;
}

impl DetRing for BigInt {
    fn ring_zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn ring_one() -> Self {
        <BigInt as One>::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_div_exact(&self, other: &Self) -> Self {
        int_exact_div(self, other).expect("inexact Bareiss division")
    }
}

impl<C: Coefficient> DetRing for Poly<C> {
    fn ring_zero() -> Self {
        Poly::zero()
    }
    fn ring_one() -> Self {
        Poly::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn ring_neg(&self) -> Self {
        Poly::neg(self)
    }
    fn ring_div_exact(&self, other: &Self) -> Self {
        self.exact_div(other).expect("inexact Bareiss division")
    }
}

/// Determinant by fraction-free Bareiss elimination.
///
/// Every intermediate division is exact. Rows below the pivot are updated in
/// parallel when `parallel` is set.
///
/// # Panics
/// If the matrix is not square.
pub fn bareiss_det<R: DetRing>(matrix: &[Vec<R>], parallel: bool) -> R {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix is not square");
    if n == 0 {
        return R::ring_one();
    }
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut prev = R::ring_one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].ring_is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].ring_is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return R::ring_zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let update = |row: &mut Vec<R>| {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = pivot_row[k].ring_mul(&row[j]).ring_sub(&lead.ring_mul(&pivot_row[j]));
                row[j] = t.ring_div_exact(&prev);
            }
            row[k] = R::ring_zero();
        };
        if parallel {
            rest.par_iter_mut().for_each(update);
        } else {
            rest.iter_mut().for_each(update);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.ring_neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cst, x, MultiPoly, VarId::*};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn integer_determinants() {
        let m = ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(bareiss_det(&m, false), BigInt::from(6));
        let swapped = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_det(&swapped, false), BigInt::from(-1));
        let singular = ints(&[&[1, 2], &[2, 4]]);
        assert!(Zero::is_zero(&bareiss_det(&singular, false)));
    }

    #[test]
    fn diagonal_polynomial() {
        let m: Vec<Vec<MultiPoly>> = vec![vec![x(F), cst(0)], vec![cst(0), x(K)]];
        assert_eq!(bareiss_det(&m, true), x(F) * x(K));
    }

    #[test]
    fn row_swap_flips_sign() {
        let m: Vec<Vec<MultiPoly>> = vec![
            vec![x(F), cst(1), x(C)],
            vec![x(K), x(F) + x(K), cst(2)],
            vec![cst(3), x(C), x(F) * x(K)],
        ];
        let mut s = m.clone();
        s.swap(0, 2);
        assert_eq!(bareiss_det(&s, false), -bareiss_det(&m, false));
    }
}
