use std::fmt::Write;

use num_traits::{One, Signed};

use crate::poly::{Monomial, MultiPoly, VarId};

fn write_monomial(out: &mut String, m: &Monomial) {
    let mut first = true;
    for v in VarId::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v.name());
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Canonical text of a polynomial: terms by decreasing monomial, explicit
/// `*`, rational coefficients as `n/d`. The output parses back to `p`.
pub fn format(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            write!(out, "{a}").unwrap();
            continue;
        }
        if !a.is_one() {
            write!(out, "{a}*").unwrap();
        }
        write_monomial(&mut out, m);
    }
    out
}
