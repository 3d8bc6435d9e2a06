use std::sync::OnceLock;

use crate::poly::{rat, BigRat, Monomial, MultiPoly, RatFun, VarId};

use super::{entry, CatalogError};

/// How the structural parameters enter the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `m`, `r`, `c` stay variables and the `(m - r)` denominator is cleared.
    Generic,
    /// Integer `m`, `r`; `c` fixed when given, otherwise left symbolic.
    Specialized { m: i64, r: i64, c: Option<i64> },
}

impl Mode {
    pub fn at(m: i64, r: i64, c: i64) -> Self {
        Mode::Specialized { m, r, c: Some(c) }
    }

    fn validate(self) -> Result<(), CatalogError> {
        if let Mode::Specialized { m, r, c } = self {
            let c_ok = c.map_or(true, |c| (-1..=1).contains(&c));
            if m < 4 || r < 2 || r > m - 1 || !c_ok {
                return Err(CatalogError::InvalidParameters { m, r, c });
            }
        }
        Ok(())
    }

    fn assignment(self) -> Vec<(VarId, BigRat)> {
        match self {
            Mode::Generic => Vec::new(),
            Mode::Specialized { m, r, c } => {
                let mut a = vec![(VarId::M, rat(m)), (VarId::R, rat(r))];
                if let Some(c) = c {
                    a.push((VarId::C, rat(c)));
                }
                a
            }
        }
    }
}

/// The two curvature relations `H` and `K` with the pieces they are built from.
#[derive(Debug, Clone)]
pub struct Core {
    pub mode: Mode,
    pub p: MultiPoly,
    pub q: MultiPoly,
    pub h: MultiPoly,
    pub k: MultiPoly,
    pub num_derf: MultiPoly,
    pub den_derf: MultiPoly,
    /// `h` and `k` carry this factor relative to the rational relations;
    /// `m - r` in generic mode, `1` otherwise.
    pub clearing: MultiPoly,
}

/// Reduced `df/dk` in generic parameters.
fn generic_derf() -> &'static RatFun {
    static CELL: OnceLock<RatFun> = OnceLock::new();
    CELL.get_or_init(|| {
        RatFun::new(entry("DerF_num0").clone(), entry("DerF_den0").clone())
            .expect("DerF denominator is nonzero")
    })
}

fn combine(h: &MultiPoly, num: &MultiPoly, den: &MultiPoly) -> MultiPoly {
    &h.derivative(VarId::F) * num + &h.derivative(VarId::K) * den
}

pub fn build_core(mode: Mode) -> Result<Core, CatalogError> {
    mode.validate()?;
    let derf = generic_derf();
    let a = mode.assignment();
    let p = entry("P").specialize_many(&a);
    let q = entry("Q").specialize_many(&a);
    let num_derf = derf.num().specialize_many(&a);
    let den_derf = derf.den().specialize_many(&a);
    let (h, clearing) = match mode {
        Mode::Generic => (entry("H_gen").clone(), MultiPoly::var(VarId::M) - MultiPoly::var(VarId::R)),
        Mode::Specialized { m, r, .. } => {
            let h = entry("H_gen").specialize_many(&a).scale(&BigRat::new((1).into(), (m - r).into()));
            (h, MultiPoly::one())
        }
    };
    let k = combine(&h, &num_derf, &den_derf);
    Ok(Core {
        mode,
        p,
        q,
        h,
        k,
        num_derf,
        den_derf,
        clearing,
    })
}

impl Core {
    pub fn new_h(&self) -> Result<MultiPoly, CatalogError> {
        reduce_to_z(&self.h, 3)
    }

    pub fn new_k(&self) -> Result<MultiPoly, CatalogError> {
        reduce_to_z(&self.k, 4)
    }
}

/// Rewrites `k^i f^j` as `z^i f^(i + j - drop)`, i.e. divides by `f^drop`
/// after substituting `k = z f`.
pub fn reduce_to_z(p: &MultiPoly, drop: u32) -> Result<MultiPoly, CatalogError> {
    if p.contains_var(VarId::Z) {
        return Err(CatalogError::AlreadyHasZ);
    }
    let mut terms = Vec::with_capacity(p.len());
    for (mono, c) in p.terms() {
        let i = mono.exp(VarId::K);
        let j = mono.exp(VarId::F);
        if i + j < drop {
            return Err(CatalogError::DegreeTooLow {
                monomial: crate::expr::format(&MultiPoly::term(mono.clone(), rat(1))),
                drop,
            });
        }
        let m = mono
            .clone()
            .with_exp(VarId::K, 0)
            .with_exp(VarId::Z, i)
            .with_exp(VarId::F, i + j - drop);
        terms.push((m, c.clone()));
    }
    Ok(MultiPoly::from_terms(terms))
}

/// `f^drop * p(z = k/f)` as a rational function; inverts [`reduce_to_z`].
pub fn expand_from_z(p: &MultiPoly, drop: u32) -> RatFun {
    let f = MultiPoly::var(VarId::F);
    let z = RatFun::new(MultiPoly::var(VarId::K), f.clone()).expect("f is nonzero");
    RatFun::from_poly(p.clone())
        .substitute(VarId::Z, &z)
        .mul_poly(&MultiPoly::term(Monomial::var(VarId::F, drop), rat(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cst, x, VarId::*};

    #[test]
    fn index_arithmetic() {
        assert_eq!(reduce_to_z(&x(K).pow(9), 3).unwrap(), x(Z).pow(9) * x(F).pow(6));
        assert_eq!(reduce_to_z(&x(F).pow(3), 3).unwrap(), cst(1));
        assert!(matches!(
            reduce_to_z(&(x(F) * x(K)), 3),
            Err(CatalogError::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(build_core(Mode::at(3, 2, 1)).is_err());
        assert!(build_core(Mode::at(7, 7, 1)).is_err());
        assert!(build_core(Mode::at(7, 4, 2)).is_err());
    }
}
