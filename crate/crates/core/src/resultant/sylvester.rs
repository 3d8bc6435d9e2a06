use super::ResultantError;
use crate::poly::{Coefficient, Poly, VarId};

/// Sylvester matrix of two polynomials with respect to `var`.
///
/// The first `deg_b` rows carry shifted coefficient lists of `a` (leading
/// coefficient first), the remaining `deg_a` rows those of `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix<C> {
    pub var: VarId,
    pub deg_a: u32,
    pub deg_b: u32,
    pub rows: Vec<Vec<Poly<C>>>,
}

impl<C: Coefficient> SylvesterMatrix<C> {
    pub fn new(a: &Poly<C>, b: &Poly<C>, var: VarId) -> Result<Self, ResultantError> {
        if a.is_zero() || b.is_zero() {
            return Err(ResultantError::ZeroInput);
        }
        let deg_a = a.degree(var);
        let deg_b = b.degree(var);
        if deg_a == 0 && deg_b == 0 {
            return Err(ResultantError::BothConstant);
        }
        let ca = a.to_univariate(var);
        let cb = b.to_univariate(var);
        let rows = sylvester_rows(&ca, &cb, Poly::zero);
        Ok(SylvesterMatrix {
            var,
            deg_a,
            deg_b,
            rows,
        })
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }
}

/// Sylvester rows from ascending coefficient lists of length `deg + 1`.
pub(crate) fn sylvester_rows<T: Clone>(ca: &[T], cb: &[T], zero: impl Fn() -> T) -> Vec<Vec<T>> {
    let da = ca.len() - 1;
    let db = cb.len() - 1;
    let n = da + db;
    let mut rows = Vec::with_capacity(n);
    for i in 0..db {
        let mut row = vec![zero(); n];
        for (j, c) in ca.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..da {
        let mut row = vec![zero(); n];
        for (j, c) in cb.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cst, x, MultiPoly, VarId::*};

    #[test]
    fn linear_pair() {
        let s = SylvesterMatrix::new(&(x(K) - cst(2)), &(x(K) - cst(5)), K).unwrap();
        assert_eq!(s.rows, vec![vec![cst(1), cst(-2)], vec![cst(1), cst(-5)]]);
    }

    #[test]
    fn shape_and_errors() {
        let a = x(K).pow(3) + x(F);
        let b = x(K).pow(2) * x(C) + cst(1);
        let s = SylvesterMatrix::new(&a, &b, K).unwrap();
        assert_eq!(s.dimension(), 5);
        assert_eq!(s.rows[0][0], cst(1));
        assert_eq!(s.rows[2][0], x(C));
        assert_eq!(
            SylvesterMatrix::new(&MultiPoly::zero(), &b, K),
            Err(ResultantError::ZeroInput)
        );
        assert_eq!(
            SylvesterMatrix::new(&x(F), &x(C), K),
            Err(ResultantError::BothConstant)
        );
    }
}
