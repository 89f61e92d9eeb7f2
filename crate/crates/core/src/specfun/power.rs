use std::fmt;
use std::str::FromStr;

use super::CompleteIntegrals;
use crate::{Error, Result};

/// Integrand of a quarter-period power integral `∫₀^K f(z|m) dz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Sn2,
    Sn4,
    Cn2,
    Cn4,
}

impl PowerKind {
    pub const ALL: [PowerKind; 4] = [
        PowerKind::Sn2,
        PowerKind::Sn4,
        PowerKind::Cn2,
        PowerKind::Cn4,
    ];
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PowerKind::Sn2 => "sn2",
            PowerKind::Sn4 => "sn4",
            PowerKind::Cn2 => "cn2",
            PowerKind::Cn4 => "cn4",
        };
        f.write_str(s)
    }
}

impl FromStr for PowerKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sn2" => Ok(PowerKind::Sn2),
            "sn4" => Ok(PowerKind::Sn4),
            "cn2" => Ok(PowerKind::Cn2),
            "cn4" => Ok(PowerKind::Cn4),
            other => Err(format!("unknown power integrand `{other}`")),
        }
    }
}

/// `∫₀^{K(m)} f(z|m) dz` for `f ∈ {sn², sn⁴, cn², cn⁴}` and `0 < m < 1`.
///
/// The closed forms
///
/// ```text
/// ∫ sn² = (K − E)/m
/// ∫ sn⁴ = [(2 + m)K − 2(1 + m)E] / (3m²)
/// ```
///
/// (and `cn² = 1 − sn²`, `cn⁴ = 1 − 2sn² + sn⁴`) are evaluated through the
/// AGM tail of [`CompleteIntegrals`], where the numerator of the `sn⁴` form
/// reduces to `K m² (1 + 2(1 + m)·tail)` and no cancellation occurs for small
/// `m`.
pub fn power_integral(kind: PowerKind, m: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(Error::domain("elliptic parameter", m));
    }
    Ok(power_integral_unchecked(kind, &CompleteIntegrals::new(m)?))
}

/// Same as [`power_integral`] but also valid at `m = 0`, where the integrals
/// reduce to the circular ones.
pub(crate) fn power_integral_unchecked(kind: PowerKind, ci: &CompleteIntegrals) -> f64 {
    let (k, m, t) = (ci.k, ci.m, ci.tail());
    match kind {
        PowerKind::Sn2 => k * (0.5 + m * t),
        PowerKind::Cn2 => k * (0.5 - m * t),
        PowerKind::Sn4 => k * (1.0 + 2.0 * (1.0 + m) * t) / 3.0,
        PowerKind::Cn4 => k * (1.0 + 2.0 * (1.0 - 2.0 * m) * t) / 3.0,
    }
}
