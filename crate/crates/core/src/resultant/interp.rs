use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::bareiss::bareiss_det;
use super::sylvester::sylvester_rows;
use super::{content_scale, ResultantError};
use crate::poly::{IntPoly, Monomial, MultiPoly, VarId};

/// Tuning knobs for [`resultant_interp_with`].
#[derive(Debug, Clone)]
pub struct InterpOptions {
    /// Largest sample point tried before giving up.
    pub max_sample: i64,
    /// Abort with [`ResultantError::Timeout`] once this instant has passed.
    pub deadline: Option<Instant>,
    /// Evaluate samples on the rayon pool.
    pub parallel: bool,
}

impl Default for InterpOptions {
    fn default() -> Self {
        InterpOptions {
            max_sample: 1_000_000,
            deadline: None,
            parallel: true,
        }
    }
}

/// Resultant of bivariate `a`, `b` in `{var, spectator}` by evaluating the
/// spectator at integers, taking integer Sylvester determinants and
/// interpolating.
pub fn resultant_interp(
    a: &MultiPoly,
    b: &MultiPoly,
    var: VarId,
    spectator: VarId,
) -> Result<MultiPoly, ResultantError> {
    resultant_interp_with(a, b, var, spectator, &InterpOptions::default())
}

/// Coefficients in `var`, each a list of `(spectator exponent, value)`.
struct Evaluator {
    coeffs: Vec<Vec<(usize, BigInt)>>,
    max_exp: usize,
}

impl Evaluator {
    fn new(p: &IntPoly, var: VarId, spectator: VarId) -> Self {
        let coeffs: Vec<Vec<(usize, BigInt)>> = p
            .to_univariate(var)
            .iter()
            .map(|c| {
                c.terms()
                    .iter()
                    .map(|(m, v)| (m.exp(spectator) as usize, v.clone()))
                    .collect()
            })
            .collect();
        let max_exp = p.degree(spectator) as usize;
        Evaluator { coeffs, max_exp }
    }

    fn eval_coeff(&self, d: usize, powers: &[BigInt]) -> BigInt {
        self.coeffs[d]
            .iter()
            .fold(BigInt::zero(), |acc, (e, c)| acc + c * &powers[*e])
    }

    fn eval_all(&self, powers: &[BigInt]) -> Vec<BigInt> {
        (0..self.coeffs.len()).map(|d| self.eval_coeff(d, powers)).collect()
    }

    fn leading_vanishes(&self, powers: &[BigInt]) -> bool {
        self.eval_coeff(self.coeffs.len() - 1, powers).is_zero()
    }
}

fn powers_of(x: i64, n: usize) -> Vec<BigInt> {
    let x = BigInt::from(x);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 0..n {
        let next = &out[i] * &x;
        out.push(next);
    }
    out
}

pub fn resultant_interp_with(
    a: &MultiPoly,
    b: &MultiPoly,
    var: VarId,
    spectator: VarId,
    opts: &InterpOptions,
) -> Result<MultiPoly, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    for p in [a, b] {
        if let Some(v) = p.variables().into_iter().find(|&v| v != var && v != spectator) {
            return Err(ResultantError::NotBivariate(v));
        }
    }
    let (sa, ai) = a.integer_primitive();
    let (sb, bi) = b.integer_primitive();
    let da = ai.degree(var);
    let db = bi.degree(var);
    if da == 0 && db == 0 {
        return Ok(MultiPoly::one());
    }
    let bound = ai.degree(spectator) as usize * db as usize + bi.degree(spectator) as usize * da as usize;
    let needed = bound + 2;

    let ea = Evaluator::new(&ai, var, spectator);
    let eb = Evaluator::new(&bi, var, spectator);
    let max_exp = ea.max_exp.max(eb.max_exp);

    let mut nodes = Vec::with_capacity(needed);
    let mut x = 1i64;
    while nodes.len() < needed {
        if x > opts.max_sample {
            return Err(ResultantError::InsufficientSamples {
                needed,
                found: nodes.len(),
            });
        }
        let pw = powers_of(x, max_exp);
        if !ea.leading_vanishes(&pw) && !eb.leading_vanishes(&pw) {
            nodes.push(x);
        }
        x += 1;
    }

    let sample = |&x: &i64| -> Result<BigInt, ResultantError> {
        if opts.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(ResultantError::Timeout);
        }
        let pw = powers_of(x, max_exp);
        let rows = sylvester_rows(&ea.eval_all(&pw), &eb.eval_all(&pw), BigInt::zero);
        Ok(bareiss_det(&rows, false))
    };
    let values: Vec<BigInt> = if opts.parallel {
        nodes.par_iter().map(sample).collect::<Result<_, _>>()?
    } else {
        nodes.iter().map(sample).collect::<Result<_, _>>()?
    };

    let coeffs = newton_interpolate(&nodes[..bound + 1], &values[..bound + 1])?;
    let guard_x = BigInt::from(nodes[bound + 1]);
    let guard = coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &guard_x + c);
    if guard != values[bound + 1] {
        return Err(ResultantError::GuardMismatch);
    }
    let poly = IntPoly::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(e, c)| (Monomial::var(spectator, e as u32), c)),
    );
    Ok(poly.to_rational().scale(&content_scale(&sa, &sb, da, db)))
}

/// Ascending coefficients of the unique polynomial of degree `< nodes.len()`
/// through the points. Values must come from an integer polynomial.
fn newton_interpolate(nodes: &[i64], values: &[BigInt]) -> Result<Vec<BigInt>, ResultantError> {
    let n = nodes.len();
    let mut c = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &c[i] - &c[i - 1];
            let den = BigInt::from(nodes[i] - nodes[i - j]);
            c[i] = crate::poly::Coefficient::exact_div(&num, &den).ok_or(ResultantError::GuardMismatch)?;
        }
    }
    let mut p: Vec<BigInt> = vec![c[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // p <- p * (s - x_k) + c_k
        let xk = BigInt::from(nodes[k]);
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, coef) in p.iter().enumerate() {
            next[i + 1] += coef;
            next[i] -= coef * &xk;
        }
        next[0] += &c[k];
        p = next;
    }
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    Ok(p)
}
