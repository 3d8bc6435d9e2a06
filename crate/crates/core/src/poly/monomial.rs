use std::cmp::Ordering;

use super::var::{VarId, NVARS};

/// Exponent vector over the variable registry.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared in registry order with `f` most significant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; NVARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; NVARS] };

    pub fn from_exponents(exps: [u32; NVARS]) -> Self {
        Monomial { exps }
    }

    pub fn var(v: VarId, exp: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = exp;
        Monomial { exps }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, v: VarId) -> u32 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: VarId, exp: u32) -> Self {
        self.exps[v.index()] = exp;
        self
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Product of monomials. Exponent overflow is a hard error.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u32; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let mut exps = [0u32; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_mul(n)
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u32; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u32; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].min(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        VarId::ALL.into_iter().filter(|v| self.exps[v.index()] > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let f2 = Monomial::var(VarId::F, 2);
        let k3 = Monomial::var(VarId::K, 3);
        let fk = Monomial::var(VarId::F, 1).mul(&Monomial::var(VarId::K, 1));
        let k2 = Monomial::var(VarId::K, 2);
        assert!(k3 > f2);
        assert!(f2 > fk && fk > k2);
        assert!(Monomial::ONE < Monomial::var(VarId::Fp, 1));
    }

    #[test]
    fn division() {
        let a = Monomial::var(VarId::F, 3).mul(&Monomial::var(VarId::C, 1));
        let b = Monomial::var(VarId::F, 1);
        assert_eq!(a.div(&b).unwrap().exp(VarId::F), 2);
        assert!(b.div(&a).is_none());
    }
}
