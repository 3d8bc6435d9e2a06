//! Acceptance suite: one line per criterion, exact comparisons only.
//!
//! Sweeps cover m in 4..=15; set `BIHARM_FULL=1` for 4..=30.

use std::time::{Duration, Instant};

use biharm_algebra::catalog::{
    z_leading, check_biconservative, check_kfconst, check_mod_delta_chain, check_nonic,
    check_relation1_delta, check_res_pq, check_special_case, entry, scan_factors, CheckOutcome,
};
use biharm_algebra::expr::{format, parse_poly};
use biharm_algebra::poly::{MultiPoly, VarId};
use biharm_algebra::resultant::{gcd_subresultant, resultant, resultant_interp};
use biharm_algebra::sweep::{run_sweep, ElimVar, SweepConfig, SweepReport};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

mod common;
use common::*;

struct Outcome {
    pass: bool,
    note: String,
}

fn from_checks(outcomes: &[CheckOutcome]) -> Outcome {
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| format!("{}: {}", o.name, o.witness.as_deref().unwrap_or("")))
        .collect();
    Outcome {
        pass: failed.is_empty(),
        note: if failed.is_empty() {
            outcomes.iter().map(|o| o.name.to_string()).collect::<Vec<_>>().join(", ")
        } else {
            failed.join("; ")
        },
    }
}

fn within(o: Outcome, start: Instant, budget: Duration) -> Outcome {
    let t = start.elapsed();
    if t > budget {
        Outcome {
            pass: false,
            note: format!("{} (over budget: {:.1}s > {}s)", o.note, t.as_secs_f64(), budget.as_secs()),
        }
    } else {
        o
    }
}

fn m_hi() -> i64 {
    if std::env::var("BIHARM_FULL").is_ok_and(|v| v == "1") {
        30
    } else {
        15
    }
}

fn sweep(var: ElimVar) -> SweepReport {
    let config = SweepConfig {
        m_hi: m_hi(),
        var,
        ..SweepConfig::default()
    };
    run_sweep(&config).expect("valid sweep config")
}

fn sweep_outcome(report: &SweepReport) -> Outcome {
    let ids: Vec<String> = report
        .exceptions
        .iter()
        .map(|e| format!("({},{},{})", e.m, e.r, e.c))
        .collect();
    let shown = if ids.len() > 6 { format!("{} cases", ids.len()) } else { ids.join(" ") };
    Outcome {
        pass: report.exit_code() == 0,
        note: format!(
            "{} cases, m in 4..={}, zero resultants: {shown}",
            report.results.len(),
            report.config.m_hi
        ),
    }
}

fn criterion_7() -> Outcome {
    let delta = entry("delta");
    let canon = entry("delta_canonical_lhs") - entry("delta_canonical_rhs") - MultiPoly::from_i64(4) * delta;
    let mut o = from_checks(&[check_relation1_delta(), check_biconservative()]);
    if !canon.is_zero() {
        o.pass = false;
        o.note = format!("7(4k-7f)^2 + 245f^2 - 128c - 4 delta = {}", format(&canon));
    } else {
        o.note.push_str(", canonical form of delta");
    }
    o
}

fn criterion_8() -> Outcome {
    let nonic = check_nonic();
    let chain = check_mod_delta_chain();
    let mut o = from_checks(&[nonic.clone(), chain]);
    if o.pass {
        let ratios: Vec<&String> = nonic.details.iter().filter(|d| d.contains("ratio")).collect();
        o.note = ratios.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ");
    }
    o
}

type Prop = fn(&mut TestRunner) -> Result<(), String>;

fn run<S: Strategy>(runner: &mut TestRunner, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner.run(&s, f).map_err(|e| e.to_string())
}

fn properties() -> Vec<(&'static str, Prop)> {
    vec![
        ("antisymmetry", |r| {
            run(r, (poly_in(KF, 3, 5), poly_in(KF, 3, 5)), |(a, b)| {
                prop_assume!(!a.is_zero() && !b.is_zero());
                let s = if a.degree(VarId::K) * b.degree(VarId::K) % 2 == 1 { -1 } else { 1 };
                let ab = resultant(&a, &b, VarId::K).unwrap();
                let ba = resultant(&b, &a, VarId::K).unwrap();
                prop_assert_eq!(ab, MultiPoly::from_i64(s) * ba);
                Ok(())
            })
        }),
        ("multiplicativity", |r| {
            run(r, (poly_in(KF, 2, 4), poly_in(KF, 2, 3), poly_in(KF, 2, 3)), |(a, b, c)| {
                prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
                let lhs = resultant(&a, &(&b * &c), VarId::K).unwrap();
                let rhs = resultant(&a, &b, VarId::K).unwrap() * resultant(&a, &c, VarId::K).unwrap();
                prop_assert_eq!(lhs, rhs);
                Ok(())
            })
        }),
        ("planted common root", |r| {
            run(r, (-20i64..=20, poly_in(&[VarId::K], 3, 4), poly_in(&[VarId::K], 3, 4)), |(x, u, v)| {
                prop_assume!(!u.is_zero() && !v.is_zero());
                let lin = MultiPoly::var(VarId::K) - MultiPoly::from_i64(x);
                prop_assert!(resultant(&(&lin * &u), &(&lin * &v), VarId::K).unwrap().is_zero());
                Ok(())
            })
        }),
        ("bareiss = interpolation", |r| {
            run(r, (poly_in(KF, 4, 6), poly_in(KF, 4, 6)), |(a, b)| {
                prop_assume!(nonconstant_in(&a, VarId::K) && nonconstant_in(&b, VarId::K));
                let direct = resultant(&a, &b, VarId::K).unwrap();
                prop_assert_eq!(direct, resultant_interp(&a, &b, VarId::K, VarId::F).unwrap());
                Ok(())
            })
        }),
        ("pseudo-division", |r| {
            run(r, (poly_in(KFC, 4, 6), poly_in(KFC, 3, 4)), |(a, b)| {
                prop_assume!(!b.is_zero());
                let d = a.pseudo_division(&b, VarId::K).unwrap();
                prop_assert_eq!(&d.scale * &a, &d.quotient * &b + &d.remainder);
                Ok(())
            })
        }),
        ("gcd divisibility", |r| {
            run(r, (poly_in(KF, 2, 3), poly_in(KF, 2, 3), poly_in(KF, 2, 3)), |(a, b, c)| {
                prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
                let (ac, bc) = (&a * &c, &b * &c);
                let g = gcd_subresultant(&ac, &bc, VarId::K).unwrap();
                prop_assert!(ac.exact_div(&g.gcd).is_some() && bc.exact_div(&g.gcd).is_some());
                prop_assert!(g.gcd.exact_div(&c).is_some());
                Ok(())
            })
        }),
        ("parser round trip", |r| {
            run(r, poly_in(ALL, 3, 8), |p| {
                prop_assert_eq!(parse_poly(&format(&p)).unwrap(), p);
                Ok(())
            })
        }),
    ]
}

fn criterion_10() -> Outcome {
    let mut failed = Vec::new();
    for (name, prop) in properties() {
        let mut runner = TestRunner::new(Config {
            cases: 500,
            failure_persistence: None,
            ..Config::default()
        });
        if let Err(e) = prop(&mut runner) {
            failed.push(format!("{name}: {e}"));
        }
    }
    Outcome {
        pass: failed.is_empty(),
        note: if failed.is_empty() {
            "7 properties x 500 instances".into()
        } else {
            failed.join("; ")
        },
    }
}

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>, Duration)> = vec![
        ("Res(P, Q, k): f^0..f^2 vanish, f^3 closed form", Box::new(|| from_checks(&[check_res_pq()])), secs(60)),
        ("Res(H, K, k) zero exactly at (7, 4)", Box::new(|| sweep_outcome(&sweep(ElimVar::K))), secs(if m_hi() == 30 { 7200 } else { 600 })),
        ("Res(H, K, f) zero everywhere", Box::new(|| sweep_outcome(&sweep(ElimVar::F))), secs(if m_hi() == 30 { 7200 } else { 600 })),
        ("z-reduction identities and leading z-coefficients", Box::new(|| from_checks(&[z_leading(11)])), secs(900)),
        ("zero sets of the leading-coefficient closed forms", Box::new(|| from_checks(&[scan_factors(10_000)])), secs(60)),
        ("m = 7, r = 4 factorizations and gcd", Box::new(|| from_checks(&[check_special_case(None)])), secs(60)),
        ("identities in delta", Box::new(criterion_7), secs(5)),
        ("final nonic and the mod-delta cross check", Box::new(criterion_8), secs(60)),
        ("constant ratio k/f relation and elimination", Box::new(|| from_checks(&[check_kfconst()])), secs(60)),
        ("engine property suite", Box::new(criterion_10), secs(300)),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let o = within(run(), start, budget);
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {name} [{:.1}s] {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.note
        );
        failures += usize::from(!o.pass);
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
