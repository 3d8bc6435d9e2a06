use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Pow, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expr::format;
use crate::poly::{rat, ratio, BigRat, MultiPoly, RatFun, VarId};
use crate::resultant::{gcd_subresultant, resultant, resultant_interp};

use super::core::{build_core, expand_from_z, Mode};
use super::scan::{scan_factors, ProductForm};
use super::entry;

/// Stable names of the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CheckName {
    ResPq,
    SpecialCase,
    Relation1Delta,
    Biconservative,
    Nonic,
    ModDeltaChain,
    Kfconst,
    ScanFactors,
    ZLeading,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::ResPq,
        CheckName::SpecialCase,
        CheckName::Relation1Delta,
        CheckName::Biconservative,
        CheckName::Nonic,
        CheckName::ModDeltaChain,
        CheckName::Kfconst,
        CheckName::ScanFactors,
        CheckName::ZLeading,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::ResPq => "res-pq",
            CheckName::SpecialCase => "special-case",
            CheckName::Relation1Delta => "relation1-delta",
            CheckName::Biconservative => "biconservative",
            CheckName::Nonic => "nonic",
            CheckName::ModDeltaChain => "mod-delta-chain",
            CheckName::Kfconst => "kfconst",
            CheckName::ScanFactors => "scan-factors",
            CheckName::ZLeading => "z-leading",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check `{0}`")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckName {
    type Err = UnknownCheck;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: CheckName,
    pub pass: bool,
    /// First failing identity, usually as a nonzero difference polynomial.
    pub witness: Option<String>,
    pub details: Vec<String>,
    pub elapsed_ms: u64,
}

impl CheckOutcome {
    pub(crate) fn finish(name: CheckName, witness: Option<String>, details: Vec<String>, start: Instant) -> Self {
        CheckOutcome {
            name,
            pass: witness.is_none(),
            witness,
            details,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Collects details and the first failure of a check.
struct Log {
    witness: Option<String>,
    details: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Log {
            witness: None,
            details: Vec::new(),
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    fn fail(&mut self, s: impl Into<String>) {
        let s = s.into();
        self.details.push(format!("FAILED: {s}"));
        self.witness.get_or_insert(s);
    }

    /// Records `lhs == rhs`, with the difference as witness otherwise.
    fn equal(&mut self, what: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> bool {
        let d = lhs - rhs;
        if d.is_zero() {
            self.note(format!("{what}: holds"));
            true
        } else {
            self.fail(format!("{what}: difference {}", format(&d)));
            false
        }
    }

    /// Records `lhs = q * rhs` for a nonzero rational `q` and returns `q`.
    fn proportional(&mut self, what: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> Option<BigRat> {
        match lhs.constant_ratio(rhs).filter(|q| !q.is_zero()) {
            Some(q) => {
                self.note(format!("{what}: ratio {q}"));
                Some(q)
            }
            None => {
                self.fail(format!("{what}: not a constant multiple, lhs = {}", format(lhs)));
                None
            }
        }
    }

    fn finish(self, name: CheckName, start: Instant) -> CheckOutcome {
        CheckOutcome::finish(name, self.witness, self.details, start)
    }
}

fn x(v: VarId) -> MultiPoly {
    MultiPoly::var(v)
}

fn c(n: i64) -> MultiPoly {
    MultiPoly::from_i64(n)
}

fn at(p: &MultiPoly, vals: &[(VarId, i64)]) -> MultiPoly {
    let a: Vec<(VarId, BigRat)> = vals.iter().map(|&(v, n)| (v, rat(n))).collect();
    p.specialize_many(&a)
}

/// Rewrites `fp^2` as `s`, leaving at most one power of `fp`.
fn rewrite_fp2(p: &MultiPoly) -> MultiPoly {
    p.map_monomials(|m| {
        let e = m.exp(VarId::Fp);
        m.clone()
            .with_exp(VarId::Fp, e % 2)
            .with_exp(VarId::S, m.exp(VarId::S) + e / 2)
    })
}

fn ratfun(n: &str, d: &str) -> RatFun {
    RatFun::new(entry(n).clone(), entry(d).clone()).expect("nonzero denominator")
}

/// Runs a check with its default parameters.
pub fn run_check(name: CheckName) -> CheckOutcome {
    match name {
        CheckName::ResPq => check_res_pq(),
        CheckName::SpecialCase => check_special_case(None),
        CheckName::Relation1Delta => check_relation1_delta(),
        CheckName::Biconservative => check_biconservative(),
        CheckName::Nonic => check_nonic(),
        CheckName::ModDeltaChain => check_mod_delta_chain(),
        CheckName::Kfconst => check_kfconst(),
        CheckName::ScanFactors => scan_factors(10_000),
        CheckName::ZLeading => z_leading(11),
    }
}

/// `Res(P, Q, k)` with `m`, `r`, `c` symbolic, computed once.
pub fn generic_res_pq() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| resultant(entry("P"), entry("Q"), VarId::K).expect("P and Q are nonzero"))
}

/// Inputs scaled by 4 multiply the 3 + 3 Sylvester resultant by 4^6.
fn res_pq_normalization() -> BigRat {
    rat(4096)
}

pub fn check_res_pq() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let res = generic_res_pq();
    let deg = res.degree(VarId::F);
    if deg == 9 {
        log.note("deg_f Res(P, Q, k) = 9");
    } else {
        log.fail(format!("deg_f Res(P, Q, k) = {deg}, expected 9"));
    }
    for d in 0..3 {
        let cd = res.coefficient(VarId::F, d);
        if !cd.is_zero() {
            log.fail(format!("coefficient of f^{d} is {}", format(&cd)));
        }
    }
    let c3 = res.coefficient(VarId::F, 3).scale(&res_pq_normalization());
    if log.equal("4^6 * [f^3] Res(P, Q, k) = CoefF3", &c3, entry("CoefF3")) {
        log.note(format!("f^3 coefficient: {}", manifest_text("CoefF3")));
    }

    let point = [(VarId::M, 4), (VarId::R, 2), (VarId::C, 1)];
    let p = at(entry("P"), &point);
    let q = at(entry("Q"), &point);
    if p.leading_coefficient_in(VarId::K).is_zero() || q.leading_coefficient_in(VarId::K).is_zero() {
        log.fail("leading k-coefficient vanishes at (4, 2, 1)");
    }
    match resultant(&p, &q, VarId::K) {
        Ok(direct) => {
            log.equal("Res(P, Q, k) specialized at (4, 2, 1) = direct", &at(res, &point), &direct);
            let closed = at(entry("CoefF3"), &point);
            let got = direct.coefficient(VarId::F, 3).scale(&res_pq_normalization());
            log.equal("direct f^3 coefficient at (4, 2, 1) = CoefF3", &got, &closed);
        }
        Err(e) => log.fail(format!("direct resultant failed: {e}")),
    }
    log.finish(CheckName::ResPq, start)
}

fn manifest_text(name: &str) -> String {
    super::manifest()
        .binding(name)
        .map(|b| b.text.clone())
        .unwrap_or_default()
}

/// `H/f` and `K/f` at `m = 7`, `r = 4` against the factored catalog forms; `c`
/// symbolic when `None`.
pub fn check_special_case(cv: Option<i64>) -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let core = build_core(Mode::Specialized { m: 7, r: 4, c: cv }).expect("valid parameters");
    let at = |name: &str| match cv {
        Some(v) => at(entry(name), &[(VarId::C, v)]),
        None => entry(name).clone(),
    };
    let f = x(VarId::F);
    let delta = at("delta");
    let (Some(p1), Some(p2)) = (core.h.exact_div(&f), core.k.exact_div(&f)) else {
        log.fail("f does not divide H and K");
        return log.finish(CheckName::SpecialCase, start);
    };
    log.equal("H(7,4)/f = factored catalog form of the first relation", &p1, &at("H74"));
    let k74 = at("K74");
    match p2.constant_ratio(&k74) {
        Some(q) if q.is_one() || q == -BigRat::one() => {
            log.note(format!("K(7,4)/f = {q} * factored catalog form of the second relation (an equation = 0)"));
        }
        _ => log.fail(format!("K(7,4)/f differs from the catalog form: {}", format(&(&p2 + &k74)))),
    }
    match gcd_subresultant(&p1, &p2, VarId::K) {
        Ok(g) => {
            log.proportional("gcd(H/f, K/f) / delta", &g.gcd, &delta);
        }
        Err(e) => log.fail(format!("gcd failed: {e}")),
    }
    match gcd_subresultant(&core.h, &core.k, VarId::K) {
        Ok(g) => {
            log.proportional("gcd(H, K) / (f * delta)", &g.gcd, &(&f * &delta));
        }
        Err(e) => log.fail(format!("gcd failed: {e}")),
    }
    let rest = [
        ("H74_cubic1", at("H74_cubic1")),
        ("H74_cubic2", at("H74_cubic2")),
        ("K74_octic", at("K74_octic")),
        ("7*f - 4*k", c(7) * x(VarId::F) - c(4) * x(VarId::K)),
    ];
    for (name, p) in rest {
        match gcd_subresultant(&p, &delta, VarId::K) {
            Ok(g) if g.gcd.is_constant() => log.note(format!("{name} is coprime to delta")),
            Ok(g) => log.fail(format!("{name} shares {} with delta", format(&g.gcd))),
            Err(e) => log.fail(format!("gcd failed: {e}")),
        }
    }
    log.finish(CheckName::SpecialCase, start)
}

pub fn check_relation1_delta() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let mr = [(VarId::M, 7), (VarId::R, 4)];
    log.equal("(4 - r) at r = 4", &at(entry("omega_coef"), &mr), &MultiPoly::zero());
    log.equal("(r - m + 3) at (7, 4)", &at(entry("theta_coef"), &mr), &MultiPoly::zero());
    let cubic = at(entry("cubic_mr"), &mr).scale(&ratio(1, 3));
    let rhs = (x(VarId::F) * entry("delta")).scale(&ratio(3, 4));
    log.equal("cubic(7, 4) = 3/4 f delta", &cubic, &rhs);
    let c0 = [(VarId::C, 0)];
    log.equal("same at c = 0", &at(&cubic, &c0), &at(&rhs, &c0));
    log.finish(CheckName::Relation1Delta, start)
}

/// `|A|^2` at `m = 7`, `r = 4`: multiplicities 1, 3, 3.
fn norm_a2() -> MultiPoly {
    let mr = [(VarId::M, 7), (VarId::R, 4)];
    let k1 = at(entry("k1"), &mr);
    let k2 = x(VarId::K);
    let k3 = at(entry("k3_mr"), &mr).scale(&ratio(1, 3));
    k1.pow(2) + c(3) * k2.pow(2) + c(3) * k3.pow(2)
}

pub fn check_biconservative() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let lhs = c(14) * norm_a2() - c(245) * x(VarId::F).pow(2) - c(96) * x(VarId::C);
    log.equal("14|A|^2 - 245 f^2 - 96 c = 3 delta", &lhs, &(c(3) * entry("delta")));
    log.finish(CheckName::Biconservative, start)
}

pub fn check_nonic() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let f = VarId::F;
    let (a2, b2) = (entry("A2"), entry("B2"));
    let (d1s, d1p, d1r) = (entry("D1_s"), entry("D1_fpp"), entry("D1_rhs"));
    let (sn, sd, rest) = (entry("D2_s_num"), entry("D2_s_den"), entry("D2_rest"));
    let nonic = entry("nonic");

    // Time derivative of A2 s - B2 with s = fp^2, divided by 98 fp.
    let g = a2 * x(VarId::Fp).pow(2) - b2;
    let dt_rest = rewrite_fp2(&(g.derivative(f) * x(VarId::Fp))).exact_div(&(c(98) * x(VarId::Fp)));
    let fpp_coeff = g.derivative(VarId::Fp).exact_div(&(c(98) * x(VarId::Fp)));
    match (dt_rest, fpp_coeff) {
        (Some(r), Some(p)) => {
            log.equal("f'' coefficient of d/dt(second relation)/(98 f')", &p, d1p);
            log.equal(
                "remaining part of d/dt(second relation)/(98 f')",
                &r,
                &(d1s * x(VarId::S) - d1r),
            );
        }
        _ => log.fail("98 f' does not divide the derivative"),
    }

    // Route B: f'' from the second form into the first, s from A2 s = B2,
    // cleared by A2 * (833 f^2 - 32 c).
    let route_b = d1s * b2 * sd + d1p * (sn * b2 + rest * a2 * sd) - d1r * a2 * sd;
    let qb = log.proportional("substitution into the differentiated form / nonic", &route_b, nonic);

    // Route A: s = B2/A2, f'' = ds/df / 2, into the second form, cleared by
    // the product A2^2 (833 f^2 - 32 c) of the denominators.
    let s = RatFun::new(b2.clone(), a2.clone()).expect("nonzero");
    let fpp = s.derivative(f).mul(&RatFun::from_poly(MultiPoly::constant(ratio(1, 2))));
    let e = fpp
        .sub(&s.mul(&RatFun::new(sn.clone(), sd.clone()).expect("nonzero")))
        .sub(&RatFun::from_poly(rest.clone()));
    let clear = a2.pow(2) * sd;
    match e.mul_poly(&clear).as_poly() {
        Some(route_a) => {
            log.proportional("s from the second relation, f'' = s'/2 / nonic", &route_a, nonic);
            let c0 = at(&route_a, &[(VarId::C, 0)]);
            if c0.len() == 1 && c0.degree(f) == 9 {
                log.note("at c = 0 only the f^9 term survives");
            } else {
                log.fail(format!("at c = 0: {}", format(&c0)));
            }
        }
        None => log.fail("clearing did not give a polynomial"),
    }
    if let Some(q) = nonic.constant_ratio(&(e.num() * sd)) {
        log.note(format!("nonic = {q} * (reduced numerator) * (833 f^2 - 32 c)"));
    }
    if qb.is_some() {
        let coeffs: Vec<String> = nonic.terms().iter().map(|(_, v)| v.to_string()).collect();
        log.note(format!("coefficients: {}", coeffs.join(", ")));
    }
    log.finish(CheckName::Nonic, start)
}

pub fn check_mod_delta_chain() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let (f, k) = (x(VarId::F), x(VarId::K));
    let fp = x(VarId::Fp);
    let delta = entry("delta");

    // k2' from delta = 0 by implicit differentiation.
    let k2p = RatFun::new(-(delta.derivative(VarId::F) * &fp), delta.derivative(VarId::K)).expect("nonzero");
    if k2p == ratfun("k2p_num", "k2p_den") {
        log.note("k2' = -delta_f/delta_k f' matches");
    } else {
        log.fail(format!("k2' derived as {k2p}"));
    }
    let mr = [(VarId::M, 7), (VarId::R, 4)];
    let k1 = at(entry("k1"), &mr);
    let k3 = at(entry("k3_mr"), &mr).scale(&ratio(1, 3));
    let omega = k2p.mul(&RatFun::new(MultiPoly::one(), &k1 - &k).expect("nonzero"));
    let k3p = RatFun::from_poly(k3.derivative(VarId::F) * &fp)
        .add(&k2p.mul(&RatFun::from_poly(k3.derivative(VarId::K))));
    let theta = k3p.mul(&RatFun::new(MultiPoly::one(), &k1 - &k3).expect("nonzero"));
    let omega_d = ratfun("Omega_num", "Omega_den");
    let theta_d = ratfun("Theta_num", "Theta_den");
    for (name, got, want) in [("Omega", &omega, &omega_d), ("Theta", &theta, &theta_d)] {
        if got == want {
            log.note(format!("{name} derived from k1, k3 matches the catalog form"));
        } else {
            log.fail(format!("{name} derived as {got}"));
        }
    }

    // (a) Omega * Theta + c + k2 k3 = 0 is the first s-relation.
    let prod_num = rewrite_fp2(&(omega_d.num() * theta_d.num()));
    let prod = RatFun::new(prod_num, omega_d.den() * theta_d.den()).expect("nonzero");
    let gauss = prod.add(&RatFun::from_poly(x(VarId::C) + &k * &k3));
    let (a1, b1) = (entry("A1"), entry("B1"));
    log.proportional(
        "numerator of Omega Theta + c + k k3 / (A1 s - B1)",
        gauss.num(),
        &(a1 * x(VarId::S) - b1),
    );

    // (b) The two s-relations agree on delta = 0.
    let (a2, b2) = (entry("A2"), entry("B2"));
    let cross = a1 * b2 - a2 * b1;
    match cross.pseudo_remainder(delta, VarId::K) {
        Ok(r) if r.is_zero() => log.note("prem(A1 B2 - A2 B1, delta, k) = 0"),
        Ok(r) => log.fail(format!("prem(A1 B2 - A2 B1, delta, k) = {}", format(&r))),
        Err(e) => log.fail(e.to_string()),
    }

    // (c) Coefficients of the normal part reduced modulo delta.
    let per_fp = |r: &RatFun| {
        RatFun::new(r.num().exact_div(&fp).expect("linear in f'"), r.den().clone()).expect("nonzero")
    };
    let s_coeff = per_fp(&omega_d)
        .add(&per_fp(&theta_d))
        .mul(&RatFun::from_poly(c(-3)));
    let target = RatFun::new(entry("D2_s_num").clone(), entry("D2_s_den").clone()).expect("nonzero");
    let diff = s_coeff.num() * target.den() - target.num() * s_coeff.den();
    match diff.pseudo_remainder(delta, VarId::K) {
        Ok(r) if r.is_zero() => log.note("-3(omega + theta) = 1911 f/(833 f^2 - 32 c) mod delta"),
        Ok(r) => log.fail(format!("s-coefficient remainder {}", format(&r))),
        Err(e) => log.fail(e.to_string()),
    }
    let lin = (norm_a2() - c(7) * x(VarId::C)) * &f - entry("D2_rest");
    match lin.pseudo_remainder(delta, VarId::K) {
        Ok(r) if r.is_zero() => log.note("(|A|^2 - 7c) f = (245 f^2 - 2c) f/14 mod delta"),
        Ok(r) => log.fail(format!("f-coefficient remainder {}", format(&r))),
        Err(e) => log.fail(e.to_string()),
    }
    let canon = entry("delta_canonical_lhs") - entry("delta_canonical_rhs");
    log.equal("7(4k - 7f)^2 + 245 f^2 - 128 c = 4 delta", &canon, &(c(4) * delta));
    log.finish(CheckName::ModDeltaChain, start)
}

/// Right-hand side of `f f'' = ...` for the constant ratio `a`.
fn kf_second_order(a: VarId, cf_power: u32) -> RatFun {
    let (m, cc, f, s) = (x(VarId::M), x(VarId::C), x(VarId::F), x(VarId::S));
    let a = x(a);
    let t1 = RatFun::new(&m + c(4) * &a, &m + c(2) * &a).expect("nonzero").mul_poly(&s);
    let t2 = RatFun::new(&m + c(2) * &a, c(2) * &a).expect("nonzero").mul_poly(&(cc * f.pow(cf_power)));
    let t3 = RatFun::from_poly((&m * (&m + c(2) * &a) * f.pow(4)).scale(&ratio(-1, 4)));
    t1.add(&t2).add(&t3)
}

pub fn check_kfconst() -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let (f, m) = (VarId::F, x(VarId::M));
    let (alpha, beta) = (x(VarId::Alpha), x(VarId::Beta));
    for name in ["KF6_rr", "KF6_4r"] {
        let p = entry(name);
        if p.degree(f) != 6 {
            log.fail(format!("{name} has f-degree {}", p.degree(f)));
        }
        log.equal(&format!("[f^6] {name} = m(m+2 alpha)^3 alpha^2 (r-1)^2/4"), &p.coefficient(f, 6), entry("KF6_lead"));
    }

    let s_val = RatFun::from_poly(
        ((&m + c(2) * &alpha) * (&m + c(2) * &beta) * x(VarId::F).pow(4)).scale(&ratio(-1, 4)),
    )
    .add(
        &RatFun::new(
            -((&m + c(2) * &alpha) * (&m + c(2) * &beta) * x(VarId::C) * x(VarId::F).pow(2)),
            c(4) * &alpha * &beta,
        )
        .expect("nonzero"),
    );
    let target = ratfun("KF_target_num", "KF_target_den");
    let eliminate = |cf_power: u32| {
        kf_second_order(VarId::Alpha, 2)
            .sub(&kf_second_order(VarId::Beta, cf_power))
            .substitute(VarId::S, &s_val)
    };
    let got = eliminate(2);
    match got.div(&target).ok().and_then(|q| q.as_poly()).and_then(|q| q.as_constant()) {
        Some(q) if !q.is_zero() => log.note(format!("elimination = {q} * (m(b-a)/(ab) c f^2 + m(b-a) f^4)")),
        _ => log.fail(format!("elimination gives {got}")),
    }
    let same = got.substitute(VarId::Beta, &RatFun::from_poly(alpha.clone()));
    if same.is_zero() {
        log.note("elimination vanishes at alpha = beta");
    } else {
        log.fail(format!("elimination at alpha = beta: {same}"));
    }
    let typo = eliminate(1);
    if typo.div(&target).ok().and_then(|q| q.as_poly()).map_or(false, |q| q.is_constant()) {
        log.note("c f in place of c f^2 gives the same elimination");
    } else {
        log.note("c f in place of c f^2 does not give the stated elimination");
    }
    log.finish(CheckName::Kfconst, start)
}

/// Leading z-coefficients of `Res(newH, newK, f^2)` against the closed
/// forms on every `(m, r)` with `4 <= m <= m_hi` and `c = -1, 1`.
pub fn z_leading(m_hi: i64) -> CheckOutcome {
    let start = Instant::now();
    let mut log = Log::new();
    let dom = ProductForm::from_entry("dominantCoef");
    let special = ProductForm::from_entry("resSpecial");
    let samples: Vec<(i64, i64, i64)> = (4..=m_hi)
        .flat_map(|m| (2..m).flat_map(move |r| [-1, 1].map(|c| (m, r, c))))
        .collect();

    let results: Vec<Result<(bool, String), String>> = samples
        .par_iter()
        .map(|&(m, r, cv)| {
            let core = build_core(Mode::at(m, r, cv)).map_err(|e| e.to_string())?;
            let nh = core.new_h().map_err(|e| e.to_string())?;
            let nk = core.new_k().map_err(|e| e.to_string())?;
            if expand_from_z(&nh, 3) != RatFun::from_poly(core.h.clone())
                || expand_from_z(&nk, 4) != RatFun::from_poly(core.k.clone())
            {
                return Err(format!("({m},{r},{cv}): f^d newX(z = k/f) differs"));
            }
            let (Some(hu), Some(ku)) = (nh.deflate(VarId::F, 2), nk.deflate(VarId::F, 2)) else {
                return Err(format!("({m},{r},{cv}): newH or newK is not even in f"));
            };
            let res = resultant_interp(&hu, &ku, VarId::F, VarId::Z).map_err(|e| e.to_string())?;
            let scale = MultiPoly::constant(BigRat::new((32 * (m - r)).into(), 3.into()).pow(7));
            let lead40 = (res.coefficient(VarId::Z, 40) * &scale).as_constant().unwrap_or_default();
            let want40 = dom.evaluate(m, r, cv);
            if lead40 != want40 {
                return Err(format!("({m},{r},{cv}): [z^40] scaled = {lead40}, closed form {want40}"));
            }
            let deg = res.degree(VarId::Z);
            if m == 2 * r - 1 {
                let lead39 = (res.coefficient(VarId::Z, 39) * &scale).as_constant().unwrap_or_default();
                let want39 = special.evaluate(m, r, cv);
                if lead39 != want39 {
                    return Err(format!("({m},{r},{cv}): [z^39] scaled = {lead39}, closed form {want39}"));
                }
                if !want39.is_zero() && deg != 39 {
                    return Err(format!("({m},{r},{cv}): z-degree {deg}, expected 39"));
                }
                Ok((!want39.is_zero(), format!("({m},{r},{cv}) degree {deg}")))
            } else {
                if !want40.is_zero() && deg != 40 {
                    return Err(format!("({m},{r},{cv}): z-degree {deg}, expected 40"));
                }
                Ok((!want40.is_zero(), format!("({m},{r},{cv}) degree {deg}")))
            }
        })
        .collect();

    let mut matched = 0;
    for r in results {
        match r {
            Ok((nonzero, _)) => matched += usize::from(nonzero),
            Err(e) => log.fail(e),
        }
    }
    log.note(format!(
        "{} samples; {matched} with a nonzero closed form matched exactly (scale (32(m-r)/3)^7)",
        samples.len()
    ));
    if matched < 40 {
        log.fail(format!("only {matched} samples with nonzero leading coefficient"));
    }

    // Res_f is the square of Res_u on one sample.
    if m_hi >= 5 {
        let core = build_core(Mode::at(5, 3, 1)).expect("valid");
        let (nh, nk) = (core.new_h().expect("degree"), core.new_k().expect("degree"));
        let res_f = resultant_interp(&nh, &nk, VarId::F, VarId::Z);
        let res_u = resultant_interp(
            &nh.deflate(VarId::F, 2).expect("even"),
            &nk.deflate(VarId::F, 2).expect("even"),
            VarId::F,
            VarId::Z,
        );
        match (res_f, res_u) {
            (Ok(rf), Ok(ru)) => {
                log.note(format!(
                    "(5,3,1): deg_z Res_f = {}, deg_z Res_u = {}",
                    rf.degree(VarId::Z),
                    ru.degree(VarId::Z)
                ));
                log.equal("(5,3,1): Res_f = Res_u^2", &rf, &ru.pow(2));
            }
            (Err(e), _) | (_, Err(e)) => log.fail(e.to_string()),
        }
    }
    log.finish(CheckName::ZLeading, start)
}
