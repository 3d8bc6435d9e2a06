//! Randomized invariants of the polynomial kernel, the resultant engine and
//! the parser. Every comparison is exact.

use biharm_algebra::expr::{format, parse_poly};
use biharm_algebra::poly::{BigRat, MultiPoly, VarId};
use biharm_algebra::resultant::{
    bareiss_det, gcd_subresultant, resultant, resultant_interp, SylvesterMatrix,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

mod common;
use common::*;

const CASES: u32 = 500;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn resultant_antisymmetry(a in poly_in(KF, 3, 5), b in poly_in(KF, 3, 5)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (da, db) = (a.degree(VarId::K), b.degree(VarId::K));
        let ab = resultant(&a, &b, VarId::K).unwrap();
        let ba = resultant(&b, &a, VarId::K).unwrap();
        let sign = if (da * db) % 2 == 1 { -MultiPoly::one() } else { MultiPoly::one() };
        prop_assert_eq!(ab, sign * ba);
    }

    #[test]
    fn resultant_multiplicativity(
        a in poly_in(KF, 2, 4),
        b in poly_in(KF, 2, 3),
        c in poly_in(KF, 2, 3),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        prop_assume!(nonconstant_in(&a, VarId::K) || nonconstant_in(&b, VarId::K) || nonconstant_in(&c, VarId::K));
        let bc = &b * &c;
        let lhs = resultant(&a, &bc, VarId::K).unwrap();
        let rhs = resultant(&a, &b, VarId::K).unwrap() * resultant(&a, &c, VarId::K).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn planted_common_root_vanishes(
        root in -20i64..=20,
        u in poly_in(&[VarId::K], 3, 4),
        v in poly_in(&[VarId::K], 3, 4),
    ) {
        prop_assume!(!u.is_zero() && !v.is_zero());
        let lin = MultiPoly::var(VarId::K) - MultiPoly::from_i64(root);
        let r = resultant(&(&lin * &u), &(&lin * &v), VarId::K).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn distinct_roots_give_product_formula(
        ra in prop::collection::vec(-10i64..=10, 1..=4),
        rb in prop::collection::vec(11i64..=30, 1..=4),
    ) {
        let build = |roots: &[i64]| {
            roots.iter().fold(MultiPoly::one(), |acc, &x| acc * (MultiPoly::var(VarId::K) - MultiPoly::from_i64(x)))
        };
        let r = resultant(&build(&ra), &build(&rb), VarId::K).unwrap();
        let mut want = BigInt::one();
        for a in &ra {
            for b in &rb {
                want *= BigInt::from(a - b);
            }
        }
        prop_assert!(!want.is_zero());
        prop_assert_eq!(r, MultiPoly::constant(BigRat::from_integer(want)));
    }

    #[test]
    fn bareiss_and_interpolation_agree(a in poly_in(KF, 4, 6), b in poly_in(KF, 4, 6)) {
        prop_assume!(nonconstant_in(&a, VarId::K) && nonconstant_in(&b, VarId::K));
        let direct = resultant(&a, &b, VarId::K).unwrap();
        let interp = resultant_interp(&a, &b, VarId::K, VarId::F).unwrap();
        prop_assert_eq!(direct, interp);
    }

    #[test]
    fn pseudo_division_identity(a in poly_in(KFC, 4, 6), b in poly_in(KFC, 3, 4)) {
        prop_assume!(!b.is_zero());
        let d = a.pseudo_division(&b, VarId::K).unwrap();
        prop_assert_eq!(&d.scale * &a, &d.quotient * &b + &d.remainder);
        prop_assert!(d.remainder.is_zero() || d.remainder.degree(VarId::K) < b.degree(VarId::K));
    }

    #[test]
    fn gcd_divides_and_contains_planted_factor(
        a in poly_in(KF, 2, 3),
        b in poly_in(KF, 2, 3),
        c in poly_in(KF, 2, 3),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd_subresultant(&ac, &bc, VarId::K).unwrap();
        prop_assert_eq!(&g.cofactor_a * &g.gcd, ac.clone());
        prop_assert_eq!(&g.cofactor_b * &g.gcd, bc.clone());
        prop_assert!(g.gcd.exact_div(&c).is_some());
        prop_assert!(g.gcd.leading_coefficient().is_positive());
    }

    #[test]
    fn parser_round_trip(p in poly_in(ALL, 3, 8)) {
        let text = format(&p);
        prop_assert_eq!(parse_poly(&text).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in poly_in(KFC, 3, 5), b in poly_in(KFC, 3, 5), c in poly_in(KFC, 3, 5)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_in(KFC, 3, 5), b in poly_in(KFC, 3, 5), pt in eval_point()) {
        let ev = |p: &MultiPoly| p.evaluate(&pt).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        p in poly_in(KFC, 3, 5),
        q in poly_in(KFC, 2, 4),
        pt in eval_point(),
    ) {
        let sub = p.substitute(VarId::K, &q);
        let qv = q.evaluate(&pt).unwrap();
        let moved: Vec<(VarId, BigRat)> = pt
            .iter()
            .map(|(v, x)| (*v, if *v == VarId::K { qv.clone() } else { x.clone() }))
            .collect();
        prop_assert_eq!(sub.evaluate(&pt).unwrap(), p.evaluate(&moved).unwrap());
    }
}

fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + t } else { acc - t };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bareiss_matches_cofactor_expansion(entries in prop::collection::vec(poly_in(KF, 2, 3), 16)) {
        let m: Vec<Vec<MultiPoly>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        prop_assert_eq!(bareiss_det(&m, false), cofactor_det(&m));
    }

    #[test]
    fn sylvester_dimension(a in poly_in(KF, 4, 5), b in poly_in(KF, 4, 5)) {
        prop_assume!(nonconstant_in(&a, VarId::K) || nonconstant_in(&b, VarId::K));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let s = SylvesterMatrix::new(&a, &b, VarId::K).unwrap();
        prop_assert_eq!(s.dimension() as u32, a.degree(VarId::K) + b.degree(VarId::K));
    }
}
