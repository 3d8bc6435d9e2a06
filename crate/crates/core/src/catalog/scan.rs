use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::expr::parse_product;
use crate::poly::{rat, MultiPoly, VarId};

use super::checks::{CheckName, CheckOutcome};
use super::{entry, manifest};

/// One factor compiled for fast integer evaluation in `m`, `r`, `c`.
#[derive(Debug, Clone)]
struct Compiled {
    poly: MultiPoly,
    /// `(coefficient, [e_m, e_r, e_c])`, present when every coefficient is
    /// an integer that fits.
    fast: Option<Vec<(i128, [u32; 3])>>,
}

impl Compiled {
    fn new(poly: MultiPoly) -> Self {
        let fast = poly
            .terms()
            .iter()
            .map(|(mono, c)| {
                if !c.is_integer() {
                    return None;
                }
                let v = c.numer().to_i128()?;
                Some((v, [mono.exp(VarId::M), mono.exp(VarId::R), mono.exp(VarId::C)]))
            })
            .collect();
        Compiled { poly, fast }
    }

    fn eval_fast(&self, vals: [i128; 3]) -> Option<i128> {
        let mut acc: i128 = 0;
        for (c, exps) in self.fast.as_ref()? {
            let mut t = *c;
            for (x, &e) in vals.iter().zip(exps) {
                t = t.checked_mul(x.checked_pow(e)?)?;
            }
            acc = acc.checked_add(t)?;
        }
        Some(acc)
    }

    fn is_zero_at(&self, m: i64, r: i64, c: i64) -> bool {
        if let Some(v) = self.eval_fast([m.into(), r.into(), c.into()]) {
            return v == 0;
        }
        self.poly
            .evaluate(&[(VarId::M, rat(m)), (VarId::R, rat(r)), (VarId::C, rat(c))])
            .expect("factor only uses m, r, c")
            .is_zero()
    }
}

/// A manifest entry kept as a product of factors.
#[derive(Debug, Clone)]
pub struct ProductForm {
    pub name: String,
    pub factors: Vec<(MultiPoly, u32)>,
}

impl ProductForm {
    /// Re-reads the manifest text of `name` as a product.
    pub fn from_entry(name: &str) -> Self {
        let text = &manifest().binding(name).expect("entry exists").text;
        let factors = parse_product(text, manifest()).expect("entry is a product");
        ProductForm {
            name: name.into(),
            factors,
        }
    }

    pub fn expand(&self) -> MultiPoly {
        self.factors
            .iter()
            .fold(MultiPoly::one(), |acc, (b, e)| acc * b.pow(*e))
    }

    pub fn evaluate(&self, m: i64, r: i64, c: i64) -> crate::poly::BigRat {
        self.expand()
            .evaluate(&[(VarId::M, rat(m)), (VarId::R, rat(r)), (VarId::C, rat(c))])
            .expect("product only uses m, r, c")
    }
}

/// Factors split by which of `m`, `r` they involve.
struct Split {
    m_only: Vec<Compiled>,
    r_only: Vec<Compiled>,
    mixed: Vec<Compiled>,
    rest: Vec<Compiled>,
}

fn split(form: &ProductForm) -> Split {
    let mut s = Split {
        m_only: Vec::new(),
        r_only: Vec::new(),
        mixed: Vec::new(),
        rest: Vec::new(),
    };
    for (b, _) in &form.factors {
        let hm = b.contains_var(VarId::M);
        let hr = b.contains_var(VarId::R);
        let c = Compiled::new(b.clone());
        match (hm, hr) {
            (true, true) => s.mixed.push(c),
            (true, false) => s.m_only.push(c),
            (false, true) => s.r_only.push(c),
            (false, false) => s.rest.push(c),
        }
    }
    s
}

/// Zero sets of the two leading-coefficient closed forms over integer
/// parameters; `m` runs over `4..=m_max`, `r` over `2..m`.
pub fn scan_factors(m_max: i64) -> CheckOutcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut witness = None;

    let dom = ProductForm::from_entry("dominantCoef");
    let special = ProductForm::from_entry("resSpecial");
    for form in [&dom, &special] {
        if &form.expand() != entry(&form.name) {
            witness.get_or_insert(format!("{} factor list does not expand to the entry", form.name));
        }
    }
    if m_max < 30 {
        witness.get_or_insert(format!("m_max = {m_max} is below 30"));
    }

    let ds = split(&dom);
    for c in [-1, 1] {
        if ds.rest.iter().any(|f| f.is_zero_at(0, 0, c)) {
            witness.get_or_insert(format!("dominantCoef has a vanishing constant factor at c = {c}"));
        }
    }
    let r_zero: Vec<bool> = (0..=m_max)
        .map(|r| ds.r_only.iter().any(|f| f.is_zero_at(0, r, 1)))
        .collect();
    let bad: Vec<(i64, i64)> = (4..=m_max)
        .into_par_iter()
        .flat_map_iter(|m| {
            let m_zero = ds.m_only.iter().any(|f| f.is_zero_at(m, 0, 1));
            let r_zero = &r_zero;
            let mixed = &ds.mixed;
            (2..m).filter_map(move |r| {
                let zero = m_zero || r_zero[r as usize] || mixed.iter().any(|f| f.is_zero_at(m, r, 1));
                let expected = m == 7 || m == 10 || m == 2 * r - 1;
                (zero != expected).then_some((m, r))
            })
        })
        .collect();
    let pairs: i64 = (4..=m_max).map(|m| m - 2).sum();
    details.push(format!(
        "dominantCoef: {pairs} pairs scanned for 4 <= m <= {m_max}, {} outside m = 7, m = 10, m = 2r - 1",
        bad.len()
    ));
    if let Some((m, r)) = bad.first() {
        witness.get_or_insert(format!("dominantCoef zero set differs at m = {m}, r = {r}"));
    }

    let ss = split(&special);
    let mut special_zeros = Vec::new();
    for r in 2..=m_max {
        let zero = ss.r_only.iter().chain(&ss.rest).any(|f| f.is_zero_at(0, r, 1));
        if zero {
            special_zeros.push(r);
        }
    }
    if !ss.m_only.is_empty() || !ss.mixed.is_empty() {
        witness.get_or_insert("resSpecial depends on m".into());
    }
    details.push(format!("resSpecial: zeros for 2 <= r <= {m_max} at r in {special_zeros:?}"));
    if special_zeros != [2, 4] {
        witness.get_or_insert(format!("resSpecial zeros {special_zeros:?}"));
    }

    CheckOutcome::finish(CheckName::ScanFactors, witness, details, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let dom = ProductForm::from_entry("dominantCoef");
        assert!(dom.evaluate(7, 3, 1).is_zero());
        assert!(dom.evaluate(9, 5, 1).is_zero());
        assert!(!dom.evaluate(8, 3, 1).is_zero());
    }

    #[test]
    fn fast_path_matches_rational() {
        let f = Compiled::new(MultiPoly::var(VarId::M).pow(40) + MultiPoly::one());
        assert!(f.fast.is_some());
        // Large values overflow i128 and fall back.
        assert!(f.eval_fast([1000, 3, 1]).is_none());
        assert!(!f.is_zero_at(1000, 3, 1));
    }
}
