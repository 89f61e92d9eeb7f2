//! Special functions for the condensate modes.
//!
//! All functions take the elliptic *parameter* `m = k²`, not the modulus.

mod elliptic;
mod jacobi;
pub(crate) mod power;
mod quad;

pub use elliptic::{ellip_e, ellip_k, CompleteIntegrals};
pub use jacobi::{jacobi_sn_cn_dn, JacobiTriple};
pub use power::{power_integral, PowerKind};
pub use quad::{quad, quad_with_budget, DEFAULT_SUBINTERVAL_BUDGET};
