//! Random polynomial strategies shared by the property tests and the
//! acceptance suite.
#![allow(dead_code)]

use biharm_algebra::poly::{BigRat, Monomial, MultiPoly, VarId, NVARS};
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRat::new(n.into(), d.into()))
}

/// Polynomials in `vars`, each exponent at most `max_exp`.
pub fn poly_in(vars: &'static [VarId], max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0..=max_exp, vars.len()), small_rat());
    prop::collection::vec(term, 0..=max_terms).prop_map(move |ts| {
        MultiPoly::from_terms(ts.into_iter().map(|(es, c)| {
            let mut exps = [0u32; NVARS];
            for (v, e) in vars.iter().zip(es) {
                exps[v.index()] = e;
            }
            (Monomial::from_exponents(exps), c)
        }))
    })
}

pub const KF: &[VarId] = &[VarId::K, VarId::F];
pub const KFC: &[VarId] = &[VarId::K, VarId::F, VarId::C];
pub const ALL: &[VarId] = &VarId::ALL;

pub fn nonconstant_in(p: &MultiPoly, v: VarId) -> bool {
    p.degree(v) >= 1
}

pub fn eval_point() -> impl Strategy<Value = Vec<(VarId, BigRat)>> {
    prop::collection::vec(small_rat(), NVARS).prop_map(|vals| VarId::ALL.iter().copied().zip(vals).collect())
}

