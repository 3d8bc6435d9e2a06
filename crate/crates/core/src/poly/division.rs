use std::cmp::Reverse;
use std::collections::BTreeMap;

use super::{Coefficient, Monomial, Poly, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by the zero polynomial")]
pub struct ZeroDivisor;

/// Result of pseudo-division: `scale * a = quotient * b + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoDivision<C> {
    pub quotient: Poly<C>,
    pub remainder: Poly<C>,
    pub scale: Poly<C>,
}

impl<C: Coefficient> Poly<C> {
    /// `Some(q)` with `self = q * d` exactly, or `None` if `d` does not
    /// divide `self` in the coefficient ring.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = d.as_constant() {
            let terms = self
                .terms()
                .iter()
                .map(|(m, a)| a.exact_div(&c).map(|q| (*m, q)))
                .collect::<Option<Vec<_>>>()?;
            return Some(Poly::from_sorted(terms));
        }
        let (dm, dc) = d.leading_term().unwrap().clone();
        let mut rem: BTreeMap<Reverse<Monomial>, C> =
            self.terms().iter().map(|(m, c)| (Reverse(*m), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((Reverse(rm), rc)) = rem.pop_first() {
            let qm = rm.div(&dm)?;
            let qc = rc.exact_div(&dc)?;
            for (m, c) in &d.terms()[1..] {
                let key = Reverse(m.mul(&qm));
                let t = c.mul(&qc);
                match rem.get_mut(&key) {
                    Some(e) => {
                        e.sub_assign(&t);
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, t.neg());
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly::from_sorted(quot))
    }

    /// Pseudo-division in `v` with `scale = lc_v(b)^(deg_v a - deg_v b + 1)`
    /// (or `1` if `deg_v a < deg_v b`).
    pub fn pseudo_division(&self, b: &Self, v: VarId) -> Result<PseudoDivision<C>, ZeroDivisor> {
        if b.is_zero() {
            return Err(ZeroDivisor);
        }
        let db = b.degree(v);
        let da = self.degree(v);
        if self.is_zero() || da < db {
            return Ok(PseudoDivision {
                quotient: Self::zero(),
                remainder: self.clone(),
                scale: Self::one(),
            });
        }
        let lb = b.leading_coefficient_in(v);
        let mut r = self.clone();
        let mut q = Self::zero();
        let mut e = da - db + 1;
        while !r.is_zero() && r.degree(v) >= db {
            let dr = r.degree(v);
            let s = r
                .coefficient(v, dr)
                .mul_monomial(&Monomial::var(v, dr - db));
            q = q.mul(&lb).add(&s);
            r = r.mul(&lb).sub(&s.mul(b));
            e -= 1;
        }
        let fix = lb.pow(e);
        Ok(PseudoDivision {
            quotient: q.mul(&fix),
            remainder: r.mul(&fix),
            scale: lb.pow(da - db + 1),
        })
    }

    /// Remainder of [`Poly::pseudo_division`].
    pub fn pseudo_remainder(&self, b: &Self, v: VarId) -> Result<Self, ZeroDivisor> {
        self.pseudo_division(b, v).map(|d| d.remainder)
    }
}
