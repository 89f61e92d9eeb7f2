//! Stationary Gross–Pitaevskii modes of a condensate in the box `[0, Q]`.
//!
//! The stationary equation is `−κψ'' + gψ³ = uψ` with `κ = ħ²/(2m)` and
//! `ψ(0) = ψ(Q) = 0`. Its `j`-th mode is
//!
//! ```text
//! g > 0:  ψ(x) = b sn(a x | m)          a = 2jK(m)/Q,  b² = mK / ((K − E) Q)
//! g < 0:  ψ(x) = b cn(a x − K | m)      a = 2jK(m)/Q,  b² = mK / ((E − (1−m)K) Q)
//! ```
//!
//! where substituting into the equation fixes `m = |g| b² / (2κ a²)`; together
//! with normalization this is the scalar equation
//! `8κ j² K (K − E) = |g| Q` (resp. `E − (1−m)K` in place of `K − E`).
//! With `κ = 1` this is the familiar `m = b²|g|/(2a²)`; the default
//! [`BoxParams`] (`ħ = m = 1`) gives `κ = ½`.

use crate::atom_box::BoxParams;
use crate::roots::bisect_secant;
use crate::specfun::power::power_integral_unchecked;
use crate::specfun::{jacobi_sn_cn_dn, quad, CompleteIntegrals, PowerKind};
use crate::{Error, ForceCoefficients, Result};

/// Upper end of the parameter bracket.
pub const MAX_PARAMETER: f64 = 1.0 - 1e-15;

/// Interior sample count of [`GpMode::gp_residual`].
pub const RESIDUAL_GRID: usize = 4096;

const QUAD_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `g > 0`, `sn` modes.
    Repulsive,
    /// `g < 0`, `cn` modes.
    Attractive,
}

impl Branch {
    pub fn of(g: f64) -> Result<Self> {
        if g > 0.0 && g.is_finite() {
            Ok(Branch::Repulsive)
        } else if g < 0.0 && g.is_finite() {
            Ok(Branch::Attractive)
        } else {
            Err(Error::domain("coupling", g))
        }
    }

    /// `K − E` or `E − (1 − m)K`, divided by `m` (finite as `m → 0`).
    fn gap_over_m(self, ci: &CompleteIntegrals) -> f64 {
        let t = ci.m * ci.tail();
        match self {
            Branch::Repulsive => ci.k * (0.5 + t),
            Branch::Attractive => ci.k * (0.5 - t),
        }
    }
}

fn check_inputs(g: f64, q: f64, j: u32) -> Result<Branch> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::domain("box length", q));
    }
    if j == 0 {
        return Err(Error::domain("mode index", 0.0));
    }
    Branch::of(g)
}

/// Left side minus right side of the parameter equation
/// `8κ j² K X(m) = |g| Q`.
fn parameter_equation(branch: Branch, m: f64, j: u32, kappa: f64, gq: f64) -> f64 {
    let ci = CompleteIntegrals::new(m).expect("parameter inside bracket");
    let j = f64::from(j);
    8.0 * kappa * j * j * ci.k * m * branch.gap_over_m(&ci) - gq
}

/// Unique elliptic parameter of mode `j` for coupling `g` in a box of length
/// `Q`. The left side of the parameter equation increases monotonically from
/// 0 at `m = 0` to ∞ at `m = 1`.
pub fn solve_parameter(g: f64, q: f64, j: u32, params: &BoxParams) -> Result<f64> {
    let branch = check_inputs(g, q, j)?;
    let kappa = params.kinetic_prefactor();
    let gq = g.abs() * q;
    let f = |m: f64| parameter_equation(branch, m, j, kappa, gq);
    if f(MAX_PARAMETER) < 0.0 {
        return Err(Error::NonConvergence {
            what: "elliptic parameter (|g|Q beyond bracket)",
            best: MAX_PARAMETER,
        });
    }
    bisect_secant(f, 0.0, MAX_PARAMETER, 0.0, "elliptic parameter")
}

/// One stationary mode with all of its constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GpMode {
    pub branch: Branch,
    pub j: u32,
    /// Elliptic parameter `m`.
    pub m_param: f64,
    pub a: f64,
    pub b: f64,
    pub delta: f64,
    pub g: f64,
    pub q: f64,
    /// Chemical potential.
    pub u: f64,
    /// `ħ²/(2m)` of the kinetic operator.
    pub kappa: f64,
}

pub fn build_mode(g: f64, q: f64, j: u32, params: &BoxParams) -> Result<GpMode> {
    let m = solve_parameter(g, q, j, params)?;
    let branch = Branch::of(g)?;
    let ci = CompleteIntegrals::new(m)?;
    let a = 2.0 * f64::from(j) * ci.k / q;
    // b² = m K / (X Q)
    let b = (ci.k / (branch.gap_over_m(&ci) * q)).sqrt();
    let delta = match branch {
        Branch::Repulsive => 0.0,
        Branch::Attractive => -ci.k,
    };
    let kappa = params.kinetic_prefactor();
    let mut mode = GpMode {
        branch,
        j,
        m_param: m,
        a,
        b,
        delta,
        g,
        q,
        u: 0.0,
        kappa,
    };
    mode.u = mode.chemical_potential();
    Ok(mode)
}

impl GpMode {
    fn integrals(&self) -> CompleteIntegrals {
        CompleteIntegrals::new(self.m_param).expect("mode parameter lies in [0, 1)")
    }

    /// `ψ` from the closed form, without the `[0, Q]` domain check.
    pub fn psi(&self, x: f64) -> f64 {
        let t = jacobi_sn_cn_dn(self.a * x + self.delta, self.m_param).expect("valid mode");
        match self.branch {
            Branch::Repulsive => self.b * t.sn,
            Branch::Attractive => self.b * t.cn,
        }
    }

    /// `ψ'` from `sn' = cn dn` and `cn' = −sn dn`.
    pub fn psi_prime(&self, x: f64) -> f64 {
        let t = jacobi_sn_cn_dn(self.a * x + self.delta, self.m_param).expect("valid mode");
        match self.branch {
            Branch::Repulsive => self.b * self.a * t.cn * t.dn,
            Branch::Attractive => -self.b * self.a * t.sn * t.dn,
        }
    }

    /// `ψ(x)` for `0 ≤ x ≤ Q`.
    pub fn wavefunction(&self, x: f64) -> Result<f64> {
        if !(0.0..=self.q).contains(&x) {
            return Err(Error::domain("position", x));
        }
        Ok(self.psi(x))
    }

    /// `|g| b² / (2κ a²)`, which must reproduce `m_param`.
    pub fn self_consistent_parameter(&self) -> f64 {
        self.g.abs() * self.b * self.b / (2.0 * self.kappa * self.a * self.a)
    }

    /// Analytic chemical potential, `κa²(1 + m)` for `g > 0` and
    /// `κa²(1 − 2m)` for `g < 0`.
    pub fn chemical_potential(&self) -> f64 {
        let base = self.kappa * self.a * self.a;
        match self.branch {
            Branch::Repulsive => base * (1.0 + self.m_param),
            Branch::Attractive => base * (1.0 - 2.0 * self.m_param),
        }
    }

    /// `∫₀^Q ψ² dx` by adaptive quadrature.
    pub fn norm(&self) -> Result<f64> {
        quad(|x| self.psi(x).powi(2), 0.0, self.q, QUAD_TOL)
    }

    /// Rayleigh quotient `∫ψ(−κψ'' + gψ³) / ∫ψ²`, integrated by parts to
    /// `∫(κψ'² + gψ⁴) / ∫ψ²` and evaluated by quadrature.
    pub fn rayleigh_quotient(&self) -> Result<f64> {
        let num = quad(
            |x| self.kappa * self.psi_prime(x).powi(2) + self.g * self.psi(x).powi(4),
            0.0,
            self.q,
            QUAD_TOL,
        )?;
        Ok(num / self.norm()?)
    }

    /// Maximum scaled residual `|−κψ'' + gψ³ − uψ| / max(|u|, 1)` over the
    /// interior of a uniform grid of [`RESIDUAL_GRID`] cells, with `ψ''` from
    /// a sixth-order central difference.
    pub fn gp_residual(&self) -> f64 {
        const W: [f64; 4] = [-49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0];
        let h = 0.02 / self.a;
        let scale = self.u.abs().max(1.0);
        let dx = self.q / RESIDUAL_GRID as f64;
        (2..=RESIDUAL_GRID - 2)
            .map(|i| {
                let x = i as f64 * dx;
                let psi = self.psi(x);
                let mut lap = W[0] * psi;
                for (k, w) in W.iter().enumerate().skip(1) {
                    let s = k as f64 * h;
                    lap += w * (self.psi(x + s) + self.psi(x - s));
                }
                lap /= h * h;
                (-self.kappa * lap + self.g * psi.powi(3) - self.u * psi).abs() / scale
            })
            .fold(0.0, f64::max)
    }

    /// Energy functional `∫ψ(−κ∂ₓₓ + ½gψ²)ψ dx`, integrated by parts and
    /// evaluated by quadrature.
    pub fn hamiltonian_functional(&self) -> Result<f64> {
        quad(
            |x| self.kappa * self.psi_prime(x).powi(2) + 0.5 * self.g * self.psi(x).powi(4),
            0.0,
            self.q,
            QUAD_TOL,
        )
    }

    /// Closed form of the energy functional at this mode's box length.
    pub fn hamiltonian_closed_form(&self) -> f64 {
        self.hamiltonian_at(self.q)
    }

    /// Closed form of the energy functional as a function of the box length
    /// with the elliptic parameter frozen at `m_param`:
    ///
    /// ```text
    /// H(Q) = κ · 2jmK² I_kin / (X Q²) + g m² K I_int / (4j X² Q)
    /// ```
    ///
    /// where `X` is `K − E` (resp. `E − (1−m)K`) and the full-box integrals
    /// over `2j` quarter periods are
    /// `I_kin = ∫[(m+1)sn² − 2m sn⁴]`, `I_int = ∫sn⁴` for `g > 0` and
    /// `I_kin = ∫[1 − (2m+1)sn² + 2m sn⁴]`, `I_int = ∫cn⁴` for `g < 0`.
    pub fn hamiltonian_at(&self, q: f64) -> f64 {
        let parts = self.energy_parts();
        parts.kinetic / (q * q) + parts.interaction / q
    }

    fn energy_parts(&self) -> EnergyParts {
        let ci = self.integrals();
        let m = self.m_param;
        let k = ci.k;
        let j = f64::from(self.j);
        let sn2 = power_integral_unchecked(PowerKind::Sn2, &ci);
        let sn4 = power_integral_unchecked(PowerKind::Sn4, &ci);
        let (i_kin, i_int) = match self.branch {
            Branch::Repulsive => ((m + 1.0) * sn2 - 2.0 * m * sn4, sn4),
            Branch::Attractive => (
                k - (2.0 * m + 1.0) * sn2 + 2.0 * m * sn4,
                power_integral_unchecked(PowerKind::Cn4, &ci),
            ),
        };
        let (i_kin, i_int) = (2.0 * j * i_kin, 2.0 * j * i_int);
        // m / X, finite at m = 0
        let ratio = 1.0 / self.branch.gap_over_m(&ci);
        EnergyParts {
            kinetic: self.kappa * 2.0 * j * k * k * ratio * i_kin,
            interaction: self.g * k * ratio * ratio * i_int / (4.0 * j),
        }
    }

    /// `(C, D)` from `M Q̈ = −∂H/∂Q` at frozen `m`: `C = 2·kinetic/M`,
    /// `D = interaction/M`.
    pub fn force_coefficients(&self, m_wall: f64) -> ForceCoefficients {
        let parts = self.energy_parts();
        ForceCoefficients {
            c: 2.0 * parts.kinetic / m_wall,
            d: parts.interaction / m_wall,
        }
    }
}

struct EnergyParts {
    /// Coefficient of `1/Q²`.
    kinetic: f64,
    /// Coefficient of `1/Q`.
    interaction: f64,
}

/// Drive coefficients of mode `j` with the elliptic parameter solved at
/// `q_ref` and held fixed.
pub fn force_coefficients(
    g: f64,
    q_ref: f64,
    j: u32,
    params: &BoxParams,
) -> Result<ForceCoefficients> {
    let mode = build_mode(g, q_ref, j, params)?;
    Ok(mode.force_coefficients(params.m_wall))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn parameter_with_unit_kinetic_prefactor() {
        // κ = 1 (ħ = 1, m = ½); values from mpmath root finding
        let p = BoxParams::new(0.5, 1.0, 1.0).unwrap();
        let m = solve_parameter(1e-8, 1.0, 1, &p).unwrap();
        assert!(rel(m, 1.013_211_835_781_753_8e-9) < 1e-12, "{m:e}");
        let m = solve_parameter(0.1, 1.0, 1, &p).unwrap();
        assert!(rel(m, 0.010_068_279_600_659_87) < 1e-12);
    }

    #[test]
    fn parameter_in_default_units() {
        let p = BoxParams::default();
        let cases = [
            (0.1, 0.020_010_164_866_445_52),
            (1e-8, 2.026_423_670_280_26e-9),
            (5.0, 0.594_934_073_525_72),
            (-5.0, 0.688_491_253_533_962_8),
        ];
        for (g, want) in cases {
            let m = solve_parameter(g, 1.0, 1, &p).unwrap();
            assert!(rel(m, want) < 1e-12, "g={g}: {m} vs {want}");
        }
    }

    #[test]
    fn mode_index_scaling() {
        let p = BoxParams::default();
        for g in [0.7, -3.0] {
            let m2 = solve_parameter(g, 1.0, 2, &p).unwrap();
            let m1 = solve_parameter(g / 4.0, 1.0, 1, &p).unwrap();
            assert!(rel(m2, m1) < 1e-13);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = BoxParams::default();
        assert!(solve_parameter(0.0, 1.0, 1, &p).is_err());
        assert!(solve_parameter(1.0, 0.0, 1, &p).is_err());
        assert!(solve_parameter(1.0, 1.0, 0, &p).is_err());
        assert!(solve_parameter(f64::NAN, 1.0, 1, &p).is_err());
        assert!(solve_parameter(1e6, 1.0, 1, &p).is_err());
    }

    #[test]
    fn linear_limit_is_box_state() {
        let mode = build_mode(1e-12, 1.0, 1, &BoxParams::default()).unwrap();
        for x in [0.1, 0.25, 0.5, 0.8] {
            let want = 2f64.sqrt() * (PI * x).sin();
            assert!((mode.wavefunction(x).unwrap() - want).abs() < 1e-10);
        }
        assert!(rel(mode.u, PI * PI / 2.0) < 1e-10);
        assert!(rel(mode.hamiltonian_closed_form(), PI * PI / 2.0) < 1e-10);
        let att = build_mode(-1e-12, 1.0, 1, &BoxParams::default()).unwrap();
        let want = 2f64.sqrt() * (PI / 4.0).sin();
        assert!((att.wavefunction(0.25).unwrap() - want).abs() < 1e-10);
    }

    #[test]
    fn boundary_and_antinode() {
        let mode = build_mode(5.0, 1.0, 1, &BoxParams::default()).unwrap();
        assert_eq!(mode.wavefunction(0.0).unwrap(), 0.0);
        assert!(mode.wavefunction(1.0).unwrap().abs() < 1e-12);
        assert!((mode.wavefunction(0.5).unwrap() - mode.b).abs() < 1e-12);
        assert!(mode.wavefunction(1.0 + 1e-9).is_err());
        assert!(mode.wavefunction(-1e-9).is_err());
    }

    #[test]
    fn repulsive_potential_exceeds_linear_value() {
        let mode = build_mode(2.0, 1.5, 2, &BoxParams::default()).unwrap();
        assert!(mode.u > mode.kappa * mode.a * mode.a);
    }

    #[test]
    fn corrupted_amplitude_is_detected() {
        let mode = build_mode(5.0, 1.0, 1, &BoxParams::default()).unwrap();
        assert!(mode.gp_residual() < 1e-8);
        let bad = GpMode {
            b: mode.b * 1.01,
            ..mode
        };
        assert!(bad.gp_residual() > 1e-3);
    }

    #[test]
    fn attractive_second_mode_has_one_node() {
        let mode = build_mode(-5.0, 1.0, 2, &BoxParams::default()).unwrap();
        let n = 10_000;
        let values: Vec<f64> = (1..n).map(|i| mode.psi(i as f64 / n as f64)).collect();
        let nodes = values
            .windows(2)
            .filter(|w| w[0].signum() != w[1].signum())
            .count();
        assert_eq!(nodes, 1);
        assert!((mode.norm().unwrap() - 1.0).abs() < 1e-10);
    }
}
