//! Sparse multivariate polynomials with exact coefficients.

mod coeff;
mod division;
mod integer;
mod monomial;
mod ratfun;
mod var;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

pub use coeff::{rat, ratio, BigRat, Coefficient};
pub use division::{PseudoDivision, ZeroDivisor};
pub use monomial::Monomial;
pub use ratfun::RatFun;
pub use var::{UnknownVariable, VarId, NVARS};

/// Polynomial over the rationals; the public value type.
pub type MultiPoly = Poly<BigRat>;
/// Polynomial over the integers, used inside elimination.
pub type IntPoly = Poly<BigInt>;

/// Sparse polynomial stored as terms sorted by decreasing monomial.
///
/// No stored coefficient is zero and monomials are unique, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no value assigned to variable `{0}`")]
pub struct MissingAssignment(pub VarId);

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => e.add_assign(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(map: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Terms must already be strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Leading coefficient under the graded-lex order (zero for zero).
    pub fn leading_coefficient(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    /// Coefficient of the given monomial.
    pub fn coeff_of(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Degree in `v`; the zero polynomial has degree 0.
    pub fn degree(&self, v: VarId) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.first().map(|(m, _)| m.total_degree()).unwrap_or(0)
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Variables occurring in the polynomial, in registry order.
    pub fn variables(&self) -> Vec<VarId> {
        VarId::ALL
            .into_iter()
            .filter(|&v| self.contains_var(v))
            .collect()
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul(s))).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m).scale(c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => e.add_assign(&p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = Poly::mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = Poly::mul(&base, &base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: VarId) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                (m.with_exp(v, e - 1), c.mul(&C::from_i64(e as i64)))
            });
        // Lowering one exponent can reorder terms, so re-sort.
        Self::from_terms(terms)
    }

    /// The polynomial multiplying `v^d`, with `v` absent.
    pub fn coefficient(&self, v: VarId, d: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == d)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Leading coefficient when viewed as a polynomial in `v`.
    pub fn leading_coefficient_in(&self, v: VarId) -> Self {
        self.coefficient(v, self.degree(v))
    }

    /// Coefficients in `v`, indexed by degree.
    pub fn to_univariate(&self, v: VarId) -> Vec<Self> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); self.degree(v) as usize + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        // Dropping v from a sorted list keeps it sorted within one v-degree.
        buckets.into_iter().map(Poly::from_sorted).collect()
    }

    pub fn from_univariate(v: VarId, coeffs: &[Self]) -> Self {
        let mut acc = Self::zero();
        for (d, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul_monomial(&Monomial::var(v, d as u32)));
            }
        }
        acc
    }

    /// Replaces every occurrence of `v` by `q`.
    pub fn substitute(&self, v: VarId, q: &Self) -> Self {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.to_univariate(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(q).add(c);
        }
        acc
    }

    /// Binds `v` to a constant.
    pub fn specialize(&self, v: VarId, value: &C) -> Self {
        self.specialize_many(&[(v, value.clone())])
    }

    /// Binds several variables to constants at once.
    pub fn specialize_many(&self, values: &[(VarId, C)]) -> Self {
        let mut powers: Vec<(VarId, Vec<C>)> = values
            .iter()
            .map(|(v, x)| (*v, vec![C::one(), x.clone()]))
            .collect();
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut mono = *m;
            for (v, pw) in powers.iter_mut() {
                let e = m.exp(*v) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw[pw.len() - 1].mul(&pw[1]);
                    pw.push(next);
                }
                coef = coef.mul(&pw[e]);
                mono = mono.with_exp(*v, 0);
            }
            if coef.is_zero() {
                continue;
            }
            match acc.get_mut(&mono) {
                Some(e) => e.add_assign(&coef),
                None => {
                    acc.insert(mono, coef);
                }
            }
        }
        Self::from_map(acc)
    }

    /// Exact value under a full assignment of the occurring variables.
    pub fn evaluate(&self, assignment: &[(VarId, C)]) -> Result<C, MissingAssignment> {
        for v in self.variables() {
            if !assignment.iter().any(|(w, _)| *w == v) {
                return Err(MissingAssignment(v));
            }
        }
        let p = self.specialize_many(assignment);
        Ok(p.as_constant().expect("all variables were assigned"))
    }

    /// Maps each monomial through `f`; colliding images are summed.
    pub fn map_monomials<F: FnMut(&Monomial) -> Monomial>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Renames variable `from` to `to`. `to` must be absent.
    pub fn rename(&self, from: VarId, to: VarId) -> Self {
        assert!(
            from == to || !self.contains_var(to),
            "rename target `{to}` already occurs"
        );
        self.map_monomials(|m| {
            let e = m.exp(from);
            m.with_exp(from, 0).with_exp(to, e)
        })
    }

    /// Replaces `v^(k*e)` by `v^e` if every exponent of `v` is divisible by `k`.
    pub fn deflate(&self, v: VarId, k: u32) -> Option<Self> {
        assert!(k > 0);
        if self.terms.iter().any(|(m, _)| m.exp(v) % k != 0) {
            return None;
        }
        Some(self.map_monomials(|m| m.with_exp(v, m.exp(v) / k)))
    }

    pub fn map_coefficients<D: Coefficient, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Product of a sequence of polynomials.
    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::one(), |acc, p| acc.mul(p))
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rat = self.map_coefficients(|c| c.to_rational());
        f.write_str(&crate::expr::format(&rat))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                Poly::$method(self, rhs)
            }
        }
        impl<C: Coefficient> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                Poly::$method(&self, &rhs)
            }
        }
        impl<C: Coefficient> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                Poly::$method(&self, rhs)
            }
        }
        impl<C: Coefficient> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                Poly::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(&self)
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

/// Shorthand for the variable `v` as a rational polynomial.
pub fn x(v: VarId) -> MultiPoly {
    MultiPoly::var(v)
}

/// Shorthand for an integer constant as a rational polynomial.
pub fn cst(n: i64) -> MultiPoly {
    MultiPoly::from_i64(n)
}
