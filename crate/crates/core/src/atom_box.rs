//! A single atom in an infinite square well `[0, Q]` whose right wall is the
//! moving boundary.
//!
//! With level populations `pₙ = |cₙ|²` held fixed, the mean energy is
//! `Σ pₙ Eₙ(Q)` with `Eₙ(Q) = ħ²π²n²/(2mQ²)`, and the wall feels
//! `F = Σ pₙ n²π²ħ²/(mQ³)`. Dividing by the wall mass gives the `B/Q³` drive.

use std::f64::consts::PI;

use crate::specfun::quad;
use crate::{Error, ForceCoefficients, Result};

const POPULATION_TOL: f64 = 1e-12;

/// Occupation probabilities of the box levels.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumPopulations {
    levels: Vec<(u32, f64)>,
}

impl QuantumPopulations {
    /// Validates `(n, pₙ)` pairs: distinct `n ≥ 1`, `pₙ ≥ 0`, `Σ pₙ = 1`.
    pub fn new(levels: Vec<(u32, f64)>) -> Result<Self> {
        Self::validate_shape(&levels)?;
        let total: f64 = levels.iter().map(|&(_, p)| p).sum();
        if (total - 1.0).abs() > POPULATION_TOL {
            return Err(Error::Populations(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        Ok(Self { levels })
    }

    /// Normalizes non-negative weights to unit sum.
    pub fn from_weights(levels: Vec<(u32, f64)>) -> Result<Self> {
        Self::validate_shape(&levels)?;
        let total: f64 = levels.iter().map(|&(_, w)| w).sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::Populations(format!("weights sum to {total}")));
        }
        let levels = levels.into_iter().map(|(n, w)| (n, w / total)).collect();
        Ok(Self { levels })
    }

    /// All probability in level `n`.
    pub fn single(n: u32) -> Result<Self> {
        Self::new(vec![(n, 1.0)])
    }

    fn validate_shape(levels: &[(u32, f64)]) -> Result<()> {
        if levels.is_empty() {
            return Err(Error::Populations("no levels given".into()));
        }
        for (i, &(n, p)) in levels.iter().enumerate() {
            if n == 0 {
                return Err(Error::Populations("level indices start at 1".into()));
            }
            if !(p >= 0.0) || !p.is_finite() {
                return Err(Error::Populations(format!("level {n} has weight {p}")));
            }
            if levels[..i].iter().any(|&(other, _)| other == n) {
                return Err(Error::Populations(format!("level {n} listed twice")));
            }
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.levels.iter().copied()
    }

    /// `Σ pₙ n²`, the only combination of the populations the force needs.
    pub fn mean_n_squared(&self) -> f64 {
        self.iter().map(|(n, p)| p * f64::from(n).powi(2)).sum()
    }
}

/// Atom mass, wall mass and ħ, all in code units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxParams {
    pub m_atom: f64,
    pub m_wall: f64,
    pub hbar: f64,
}

impl Default for BoxParams {
    fn default() -> Self {
        Self {
            m_atom: 1.0,
            m_wall: 1.0,
            hbar: 1.0,
        }
    }
}

impl BoxParams {
    pub fn new(m_atom: f64, m_wall: f64, hbar: f64) -> Result<Self> {
        for (what, v) in [("atom mass", m_atom), ("wall mass", m_wall), ("hbar", hbar)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(what, v));
            }
        }
        Ok(Self {
            m_atom,
            m_wall,
            hbar,
        })
    }

    /// Prefactor `ħ²/(2m)` of the kinetic operator.
    pub fn kinetic_prefactor(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.m_atom)
    }
}

fn check_length(q: f64) -> Result<()> {
    if q > 0.0 && q.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("box length", q))
    }
}

/// `Eₙ(Q) = ħ²π²n²/(2mQ²)`.
pub fn energy_level(n: u32, q: f64, params: &BoxParams) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("level index", 0.0));
    }
    check_length(q)?;
    let n = f64::from(n);
    Ok(params.kinetic_prefactor() * (PI * n / q).powi(2))
}

/// `Σ pₙ Eₙ(Q)`.
pub fn mean_energy(pop: &QuantumPopulations, q: f64, params: &BoxParams) -> Result<f64> {
    check_length(q)?;
    pop.iter()
        .map(|(n, p)| energy_level(n, q, params).map(|e| p * e))
        .sum()
}

/// `B = Σ pₙ n²π²ħ²/(m M)`; the drive reads `Q̈ = B/Q³ − ω²(Q − Q₀)`.
pub fn coefficient_b(pop: &QuantumPopulations, params: &BoxParams) -> ForceCoefficients {
    let b = pop.mean_n_squared() * (PI * params.hbar).powi(2) / (params.m_atom * params.m_wall);
    ForceCoefficients::atom(b)
}

/// Mean force on the wall, `Σ pₙ n²π²ħ²/(mQ³)`.
pub fn pressure_force(pop: &QuantumPopulations, q: f64, params: &BoxParams) -> Result<f64> {
    check_length(q)?;
    Ok(pop.mean_n_squared() * (PI * params.hbar).powi(2) / (params.m_atom * q.powi(3)))
}

/// Force as the work done on the wall: `−∂/∂Q Σ pₙ Eₙ(Q) = Σ pₙ 2Eₙ(Q)/Q`.
pub fn energy_gradient_force(pop: &QuantumPopulations, q: f64, params: &BoxParams) -> Result<f64> {
    check_length(q)?;
    pop.iter()
        .map(|(n, p)| energy_level(n, q, params).map(|e| 2.0 * p * e / q))
        .sum()
}

/// Force as momentum flux: level `n` carries momentum `pₙ = nπħ/Q` and
/// probability current `Jₙ = pₙ/(2mQ)`, and reflection transfers `2pₙ` per
/// unit current, so `F = Σ 2 |cₙ|² pₙ Jₙ`.
pub fn current_force(pop: &QuantumPopulations, q: f64, params: &BoxParams) -> Result<f64> {
    check_length(q)?;
    Ok(pop
        .iter()
        .map(|(n, weight)| {
            let momentum = f64::from(n) * PI * params.hbar / q;
            let current = momentum / (2.0 * params.m_atom * q);
            2.0 * weight * momentum * current
        })
        .sum())
}

/// Normalized box eigenfunction `√(2/Q) sin(nπx/Q)`.
pub fn eigenfunction(n: u32, x: f64, q: f64) -> f64 {
    (2.0 / q).sqrt() * (f64::from(n) * PI * x / q).sin()
}

/// Real part of the Berry connection of level `n`,
/// `∫₀^Q φₙ(x, Q) ∂φₙ(x, Q)/∂Q dx`, evaluated numerically (fourth-order
/// central difference in `Q`, adaptive quadrature in `x`). The eigenfunctions
/// are real and normalized, so the connection vanishes.
pub fn vector_potential(n: u32, q: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("level index", 0.0));
    }
    check_length(q)?;
    let h = 1e-4 * q;
    let d_dq = |x: f64| {
        let f = |qq: f64| eigenfunction(n, x, qq);
        (8.0 * (f(q + h) - f(q - h)) - (f(q + 2.0 * h) - f(q - 2.0 * h))) / (12.0 * h)
    };
    quad(|x| eigenfunction(n, x, q) * d_dq(x), 0.0, q, 1e-12)
}

/// Unit system used by the CLI: nanometres, units of 10⁻⁷ s and ħ = 1.
pub mod units {
    pub const HBAR_SI: f64 = 1.054_571_817e-34;
    pub const LENGTH_M: f64 = 1e-9;
    pub const TIME_S: f64 = 1e-7;
    /// Mass unit fixed by `ħ = 1`: `ħ·T/L²` in kilograms.
    pub const MASS_KG: f64 = HBAR_SI * TIME_S / (LENGTH_M * LENGTH_M);
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalEstimate {
    /// `B` in m⁴ s⁻².
    pub b_si: f64,
    /// `B` in nm⁴ per (10⁻⁷ s)².
    pub b_code: f64,
    pub m_atom_code: f64,
    pub m_wall_code: f64,
    pub omega_code: f64,
    /// `2π/ω` in seconds.
    pub period_si: f64,
    pub period_code: f64,
}

/// `B` for a single populated level `n` with SI masses and frequency,
/// converted to code units.
pub fn physical_estimate(
    n: u32,
    m_atom_si: f64,
    m_wall_si: f64,
    omega_si: f64,
) -> Result<PhysicalEstimate> {
    if n == 0 {
        return Err(Error::domain("level index", 0.0));
    }
    for (what, v) in [
        ("atom mass", m_atom_si),
        ("wall mass", m_wall_si),
        ("frequency", omega_si),
    ] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::domain(what, v));
        }
    }
    let n2 = f64::from(n).powi(2);
    let b_si = n2 * (PI * units::HBAR_SI).powi(2) / (m_atom_si * m_wall_si);
    let b_code = b_si * (units::TIME_S * units::TIME_S) / units::LENGTH_M.powi(4);
    let period_si = 2.0 * PI / omega_si;
    Ok(PhysicalEstimate {
        b_si,
        b_code,
        m_atom_code: m_atom_si / units::MASS_KG,
        m_wall_code: m_wall_si / units::MASS_KG,
        omega_code: omega_si * units::TIME_S,
        period_si,
        period_code: period_si / units::TIME_S,
    })
}
