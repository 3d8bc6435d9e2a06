use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{BigRat, MultiPoly, VarId, ZeroDivisor};
use crate::resultant::gcd_rational;

/// Quotient of two polynomials in reduced form.
///
/// `gcd(num, den)` is constant, both have integer coefficients with joint
/// content one, and `den` has a positive leading coefficient.
#[derive(Clone, Debug)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ZeroDivisor> {
        if den.is_zero() {
            return Err(ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(MultiPoly::zero()));
        }
        let g = gcd_rational(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::scaled(num, den))
    }

    /// Rescales by a rational constant so the normalization holds.
    fn scaled(num: MultiPoly, den: MultiPoly) -> Self {
        let mut lcm = BigInt::one();
        for (_, c) in num.terms().iter().chain(den.terms()) {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::from(0);
        for (_, c) in num.terms().iter().chain(den.terms()) {
            g = g.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let mut s = BigRat::new(lcm, g);
        if den.leading_coefficient().is_negative() {
            s = -s;
        }
        RatFun {
            num: num.scale(&s),
            den: den.scale(&s),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::scaled(p, MultiPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value if the denominator is constant.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&(BigRat::one() / d)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn div(&self, other: &Self) -> Result<Self, ZeroDivisor> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        RatFun {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn derivative(&self, v: VarId) -> Self {
        let num = &self.num.derivative(v) * &self.den - &self.num * &self.den.derivative(v);
        Self::new(num, self.den.pow(2)).expect("nonzero denominator")
    }

    /// Replaces `v` by a rational function.
    pub fn substitute(&self, v: VarId, q: &RatFun) -> Self {
        let n = self.num.degree(v).max(self.den.degree(v));
        // Homogenize both sides by q.den^n.
        let hom = |p: &MultiPoly| {
            let coeffs = p.to_univariate(v);
            let mut acc = MultiPoly::zero();
            for (d, c) in coeffs.iter().enumerate() {
                acc = acc + c * q.num.pow(d as u32) * q.den.pow(n - d as u32);
            }
            acc
        };
        let num = hom(&self.num);
        let den = hom(&self.den);
        Self::new(num, den).expect("substitution made the denominator vanish")
    }

    pub fn evaluate(&self, assignment: &[(VarId, BigRat)]) -> Result<BigRat, super::MissingAssignment> {
        let n = self.num.evaluate(assignment)?;
        let d = self.den.evaluate(assignment)?;
        Ok(n / d)
    }

    pub fn map_polys<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> Result<Self, ZeroDivisor> {
        Self::new(f(&self.num), f(&self.den))
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun {}

impl From<MultiPoly> for RatFun {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl super::Coefficient for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFun::from_poly(MultiPoly::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(&self.num.leading_coefficient())
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = RatFun::add(self, other);
    }
    fn sub_assign(&mut self, other: &Self) {
        *self = RatFun::sub(self, other);
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other).ok()
    }
    fn to_rational(&self) -> BigRat {
        self.as_poly()
            .and_then(|p| p.as_constant())
            .expect("rational function is not a constant")
    }
}
