use thiserror::Error;

use crate::billiard::BilliardState;
use crate::dynamics::WallState;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid populations: {0}")]
    Populations(String),

    #[error("{what} did not converge (best estimate {best})")]
    NonConvergence { what: &'static str, best: f64 },

    #[error("wall fell below the guard length at t = {}, Q = {}", .last.t, .last.q)]
    Singularity { last: WallState },

    #[error("step size underflow at t = {}, Q = {}", .last.t, .last.q)]
    StepUnderflow { last: WallState },

    #[error("no stable equilibrium could be bracketed")]
    NoStableRoot,

    #[error("energy {energy} lies below the potential minimum {minimum}")]
    EnergyBelowMinimum { energy: f64, minimum: f64 },

    #[error("event accumulation at t = {}: {reason}", .last.t)]
    EventAccumulation {
        last: BilliardState,
        reason: &'static str,
    },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }
}
