//! Dynamics of a classical oscillating wall bounding a quantum subsystem.
//!
//! A harmonically bound wall closes a one-dimensional box holding either a
//! single atom or a Bose–Einstein condensate. The box contents push on the
//! wall through the dependence of their energy on the box length `Q`, which
//! yields the reduced equation of motion
//!
//! ```text
//! Q̈ = C/Q³ + D/Q² − ω²(Q − Q₀)
//! ```
//!
//! with `D = 0` for a non-interacting atom. The crate provides
//!
//! * [`specfun`]: complete elliptic integrals, Jacobi elliptic functions and
//!   adaptive quadrature,
//! * [`atom_box`]: level energies and the `1/Q³` pressure coefficient of a
//!   boxed atom,
//! * [`gp_modes`]: stationary Gross–Pitaevskii modes of a boxed condensate and
//!   the resulting `(C, D)` coefficients,
//! * [`dynamics`]: an adaptive Runge–Kutta integrator for the wall together
//!   with equilibrium and turning-point solvers,
//! * [`billiard`]: an event-driven classical comparison where the atom is a
//!   point particle bouncing elastically off the wall,
//! * [`scenario`]: configuration, presets and CSV output used by the CLI.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atom_box;
pub mod billiard;
pub mod dynamics;
mod error;
pub mod gp_modes;
pub(crate) mod roots;
pub mod scenario;
pub mod specfun;

pub use error::{Error, Result};

/// Drive constants of the reduced wall equation, already divided by the wall
/// mass: `C` multiplies `1/Q³` and `D` multiplies `1/Q²`.
///
/// For a single atom `C` is the coefficient usually written `B` and `D = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ForceCoefficients {
    pub c: f64,
    pub d: f64,
}

impl ForceCoefficients {
    pub fn new(c: f64, d: f64) -> Self {
        Self { c, d }
    }

    /// Coefficients of the atom case, where only the `1/Q³` term survives.
    pub fn atom(b: f64) -> Self {
        Self { c: b, d: 0.0 }
    }
}
