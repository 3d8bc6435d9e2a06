use std::fmt;
use std::str::FromStr;

/// Number of symbols in the variable registry.
pub const NVARS: usize = 10;

/// A symbol from the closed variable registry.
///
/// The declaration order is the fixed total order `f < k < z < m < r < c <
/// alpha < beta < s < fp`. `f` is the most significant variable when the
/// monomial order breaks ties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Mean curvature.
    F,
    /// Middle principal curvature.
    K,
    /// Ratio `k / f`.
    Z,
    /// Hypersurface dimension.
    M,
    /// `1 + ` multiplicity of the middle curvature.
    R,
    /// Sectional curvature of the ambient space form.
    C,
    Alpha,
    Beta,
    /// Square of the derivative of `f` along the gradient curve.
    S,
    /// Derivative of `f` along the gradient curve.
    Fp,
}

impl VarId {
    pub const ALL: [VarId; NVARS] = [
        VarId::F,
        VarId::K,
        VarId::Z,
        VarId::M,
        VarId::R,
        VarId::C,
        VarId::Alpha,
        VarId::Beta,
        VarId::S,
        VarId::Fp,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VarId::F => "f",
            VarId::K => "k",
            VarId::Z => "z",
            VarId::M => "m",
            VarId::R => "r",
            VarId::C => "c",
            VarId::Alpha => "alpha",
            VarId::Beta => "beta",
            VarId::S => "s",
            VarId::Fp => "fp",
        }
    }

    pub fn from_name(name: &str) -> Option<VarId> {
        VarId::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown variable `{0}`")]
pub struct UnknownVariable(pub String);

impl FromStr for VarId {
    type Err = UnknownVariable;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarId::from_name(s).ok_or_else(|| UnknownVariable(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_order_is_fixed() {
        let mut sorted = VarId::ALL;
        sorted.sort();
        assert_eq!(sorted, VarId::ALL);
        assert!(VarId::F < VarId::K && VarId::C < VarId::Alpha && VarId::S < VarId::Fp);
    }

    #[test]
    fn names_round_trip() {
        for v in VarId::ALL {
            assert_eq!(v.name().parse::<VarId>().unwrap(), v);
        }
        assert!("x".parse::<VarId>().is_err());
    }
}
