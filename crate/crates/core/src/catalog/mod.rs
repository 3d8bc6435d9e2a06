//! Named polynomials of the classification and the exact checks built on
//! them.
//!
//! Most entries come from an embedded manifest ([`MANIFEST_TEXT`]); the
//! relations `H`, `K` and the connection functions are constructed.

mod checks;
mod core;
mod scan;

use std::sync::OnceLock;

use crate::expr::{load_manifest, Manifest};
use crate::poly::{MultiPoly, RatFun};

pub use self::core::{build_core, expand_from_z, reduce_to_z, Core, Mode};
pub use checks::{
    z_leading, check_biconservative, check_kfconst, check_mod_delta_chain, check_nonic,
    check_relation1_delta, check_res_pq, check_special_case, generic_res_pq, run_check, CheckName,
    CheckOutcome, UnknownCheck,
};
pub use scan::{scan_factors, ProductForm};

pub const MANIFEST_TEXT: &str = include_str!("manifest.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid parameters m = {m}, r = {r}, c = {c:?}")]
    InvalidParameters { m: i64, r: i64, c: Option<i64> },
    #[error("monomial {monomial} has (f, k)-degree below {drop}")]
    DegreeTooLow { monomial: String, drop: u32 },
    #[error("input already contains z")]
    AlreadyHasZ,
}

/// The embedded manifest, parsed once.
pub fn manifest() -> &'static Manifest {
    static CELL: OnceLock<Manifest> = OnceLock::new();
    CELL.get_or_init(|| load_manifest(MANIFEST_TEXT).expect("embedded manifest is valid"))
}

/// Manifest entry by name.
///
/// # Panics
/// If the name is not bound; callers use fixed names.
pub fn entry(name: &str) -> &'static MultiPoly {
    manifest()
        .get(name)
        .unwrap_or_else(|| panic!("no manifest entry `{name}`"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryValue {
    Poly(MultiPoly),
    Rational(RatFun),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub value: EntryValue,
    /// Manifest text, or a description of the construction.
    pub source: String,
    pub from_manifest: bool,
}

fn constructed() -> Vec<CatalogEntry> {
    let generic = build_core(Mode::Generic).expect("generic mode is always valid");
    let rf = |n: &str, d: &str| RatFun::new(entry(n).clone(), entry(d).clone()).expect("nonzero denominator");
    let poly = |name: &str, value: MultiPoly, source: &str| CatalogEntry {
        name: name.into(),
        value: EntryValue::Poly(value),
        source: source.into(),
        from_manifest: false,
    };
    let ratfun = |name: &str, value: RatFun, source: &str| CatalogEntry {
        name: name.into(),
        value: EntryValue::Rational(value),
        source: source.into(),
        from_manifest: false,
    };
    vec![
        ratfun(
            "DerF",
            RatFun::new(generic.num_derf.clone(), generic.den_derf.clone()).expect("nonzero"),
            "DerF_num0 / DerF_den0, reduced",
        ),
        poly("K_gen", generic.k.clone(), "D[H_gen, f]*num(DerF) + D[H_gen, k]*den(DerF)"),
        ratfun("k2_prime", rf("k2p_num", "k2p_den"), "-D[delta, f]/D[delta, k]*fp"),
        ratfun("Omega", rf("Omega_num", "Omega_den"), "k2_prime/(k1 - k) at m = 7, r = 4"),
        ratfun("Theta", rf("Theta_num", "Theta_den"), "(7/2*fp - k2_prime)/(k1 - k3) at m = 7, r = 4"),
    ]
}

/// Every catalog entry: the manifest bindings in order, then the
/// constructed ones.
pub fn entries() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<CatalogEntry> = manifest()
            .bindings()
            .iter()
            .map(|b| CatalogEntry {
                name: b.name.clone(),
                value: EntryValue::Poly(b.value.clone()),
                source: b.text.clone(),
                from_manifest: true,
            })
            .collect();
        out.extend(constructed());
        out
    })
}
