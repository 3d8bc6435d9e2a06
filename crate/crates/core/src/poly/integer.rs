use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRat, IntPoly, Monomial, MultiPoly, Poly};

impl IntPoly {
    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading_coefficient().is_negative() {
            g = -g;
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect(),
        }
    }

    pub fn to_rational(&self) -> MultiPoly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, BigRat::from_integer(c.clone())))
                .collect(),
        }
    }
}

impl MultiPoly {
    /// Splits `self = scale * prim` with `prim` a primitive integer
    /// polynomial whose leading coefficient is positive.
    pub fn integer_primitive(&self) -> (BigRat, IntPoly) {
        if self.is_zero() {
            return (BigRat::zero(), IntPoly::zero());
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        let int = Poly { terms: ints };
        let prim = int.primitive_part();
        let scale = self.leading_coefficient() / BigRat::from_integer(prim.leading_coefficient());
        (scale, prim)
    }

    /// Same polynomial with integer coefficients, if it has them.
    pub fn to_integer(&self) -> Option<IntPoly> {
        self.terms
            .iter()
            .map(|(m, c)| c.is_integer().then(|| (*m, c.numer().clone())))
            .collect::<Option<Vec<_>>>()
            .map(|terms| Poly { terms })
    }

    /// Positive scalar multiple with leading coefficient one.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coefficient();
        self.scale(&(BigRat::one() / lc))
    }

    /// `Some(q)` with `self = q * other` for a rational constant `q`.
    pub fn constant_ratio(&self, other: &MultiPoly) -> Option<BigRat> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then(BigRat::one);
        }
        if self.len() != other.len() {
            return None;
        }
        let q = self.leading_coefficient() / other.leading_coefficient();
        let same = self
            .terms
            .iter()
            .zip(other.terms.iter())
            .all(|((ma, ca), (mb, cb))| ma == mb && *ca == cb * &q);
        same.then_some(q)
    }
}
