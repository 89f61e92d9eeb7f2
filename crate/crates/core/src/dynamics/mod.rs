//! Reduced wall dynamics `Q̈ = C/Q³ + D/Q² − ω²(Q − Q₀)`.

mod integrate;

pub use integrate::{integrate, IntegratorOptions, Trajectory, TrajectoryStats};

use crate::roots::bisect_secant;
use crate::{Error, ForceCoefficients, Result};

/// Wall position and velocity at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallState {
    pub t: f64,
    pub q: f64,
    pub qdot: f64,
}

impl WallState {
    pub fn new(t: f64, q: f64, qdot: f64) -> Self {
        Self { t, q, qdot }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub omega: f64,
    pub q0: f64,
    pub coeffs: ForceCoefficients,
}

impl OscillatorParams {
    pub fn new(omega: f64, q0: f64, coeffs: ForceCoefficients) -> Result<Self> {
        if !(omega >= 0.0) || !omega.is_finite() {
            return Err(Error::domain("oscillator frequency", omega));
        }
        if !(q0 > 0.0) || !q0.is_finite() {
            return Err(Error::domain("equilibrium length", q0));
        }
        if !coeffs.c.is_finite() || !coeffs.d.is_finite() {
            return Err(Error::domain("drive coefficient", coeffs.c + coeffs.d));
        }
        Ok(Self { omega, q0, coeffs })
    }

    fn accel_unchecked(&self, q: f64) -> f64 {
        let inv = 1.0 / q;
        let ForceCoefficients { c, d } = self.coeffs;
        inv * inv * (c * inv + d) - self.omega * self.omega * (q - self.q0)
    }

    fn potential_unchecked(&self, q: f64) -> f64 {
        let inv = 1.0 / q;
        let ForceCoefficients { c, d } = self.coeffs;
        inv * (0.5 * c * inv + d) + 0.5 * (self.omega * (q - self.q0)).powi(2)
    }

    /// `C/Q³ + D/Q² − ω²(Q − Q₀)`.
    pub fn acceleration(&self, q: f64) -> Result<f64> {
        check_length(q)?;
        Ok(self.accel_unchecked(q))
    }

    /// `U(Q) = C/(2Q²) + D/Q + ½ω²(Q − Q₀)²`, so that `Q̈ = −U'(Q)`.
    pub fn effective_potential(&self, q: f64) -> Result<f64> {
        check_length(q)?;
        Ok(self.potential_unchecked(q))
    }

    /// Conserved specific energy `½Q̇² + U(Q)`.
    pub fn energy(&self, state: &WallState) -> Result<f64> {
        Ok(0.5 * state.qdot * state.qdot + self.effective_potential(state.q)?)
    }
}

fn check_length(q: f64) -> Result<()> {
    if q > 0.0 && q.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("wall position", q))
    }
}

pub fn acceleration(q: f64, p: &OscillatorParams) -> Result<f64> {
    p.acceleration(q)
}

pub fn effective_potential(q: f64, p: &OscillatorParams) -> Result<f64> {
    p.effective_potential(q)
}

const MAX_EXPANSIONS: usize = 200;

/// Stable root `Q*` of the acceleration (`U'(Q*) = 0`, `U''(Q*) > 0`)
/// nearest to `Q₀`, found by expanding a bracket away from `Q₀` in the
/// direction the net force points.
pub fn equilibrium(p: &OscillatorParams) -> Result<f64> {
    if !(p.omega > 0.0) {
        return Err(Error::domain("oscillator frequency", p.omega));
    }
    let f = |q: f64| p.accel_unchecked(q);
    let a0 = f(p.q0);
    if a0 == 0.0 {
        return check_stable(p, p.q0);
    }
    let mut step = 1e-3 * p.q0;
    let (lo, hi) = if a0 > 0.0 {
        // pushed outward: search to the right for a < 0
        let mut lo = p.q0;
        let mut hi = p.q0 + step;
        let mut n = 0;
        while f(hi) > 0.0 {
            lo = hi;
            step *= 2.0;
            hi = p.q0 + step;
            n += 1;
            if n > MAX_EXPANSIONS || !hi.is_finite() {
                return Err(Error::NoStableRoot);
            }
        }
        (lo, hi)
    } else {
        // pulled inward: search to the left for a > 0
        let mut hi = p.q0;
        let mut lo = p.q0 - step;
        let mut n = 0;
        loop {
            if lo <= 0.0 {
                lo = 0.5 * hi;
            }
            if f(lo) > 0.0 {
                break;
            }
            hi = lo;
            step *= 2.0;
            lo = p.q0 - step;
            n += 1;
            if n > MAX_EXPANSIONS || hi < f64::MIN_POSITIVE {
                return Err(Error::NoStableRoot);
            }
        }
        (lo, hi)
    };
    let root = bisect_secant(f, lo, hi, 0.0, "equilibrium")?;
    check_stable(p, root)
}

fn check_stable(p: &OscillatorParams, q: f64) -> Result<f64> {
    // U''(Q) = 3C/Q⁴ + 2D/Q³ + ω²
    let ForceCoefficients { c, d } = p.coeffs;
    let curvature = 3.0 * c / q.powi(4) + 2.0 * d / q.powi(3) + p.omega * p.omega;
    if curvature > 0.0 {
        Ok(q)
    } else {
        Err(Error::NoStableRoot)
    }
}

/// The two roots of `U(Q) = e` on either side of the stable equilibrium.
pub fn turning_points(e: f64, p: &OscillatorParams) -> Result<(f64, f64)> {
    let center = equilibrium(p)?;
    let u_min = p.potential_unchecked(center);
    if !(e > u_min) {
        return Err(Error::EnergyBelowMinimum {
            energy: e,
            minimum: u_min,
        });
    }
    let g = |q: f64| p.potential_unchecked(q) - e;

    let mut step = 1e-3 * center;
    let mut hi = center + step;
    let mut n = 0;
    while g(hi) < 0.0 {
        step *= 2.0;
        hi = center + step;
        n += 1;
        if n > MAX_EXPANSIONS || !hi.is_finite() {
            return Err(Error::domain("energy above confinement", e));
        }
    }
    let right = bisect_secant(g, center, hi, 0.0, "right turning point")?;

    let mut lo = 0.5 * center;
    let mut n = 0;
    while g(lo) < 0.0 {
        lo *= 0.5;
        n += 1;
        if n > MAX_EXPANSIONS {
            return Err(Error::domain("energy above confinement", e));
        }
    }
    let left = bisect_secant(g, lo, center, 0.0, "left turning point")?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(c: f64, d: f64, omega: f64, q0: f64) -> OscillatorParams {
        OscillatorParams::new(omega, q0, ForceCoefficients::new(c, d)).unwrap()
    }

    #[test]
    fn acceleration_values() {
        assert_eq!(params(0.0, 0.0, 1.0, 1.3).acceleration(1.3).unwrap(), 0.0);
        assert!((params(0.01, 0.0, 1.0, 1.0).acceleration(1.0).unwrap() - 0.01).abs() < 1e-16);
        assert!(params(8.0, -4.0, 0.0, 1.0).acceleration(2.0).unwrap().abs() < 1e-16);
        assert!(params(1.0, 0.0, 1.0, 1.0).acceleration(0.0).is_err());
        assert!(params(1.0, 0.0, 1.0, 1.0).acceleration(-0.5).is_err());
    }

    #[test]
    fn potential_values() {
        assert_eq!(
            params(0.0, 0.0, 1.0, 2.0).effective_potential(2.0).unwrap(),
            0.0
        );
        let u = params(0.1, 0.0, 1.0, 1.0).effective_potential(1.8).unwrap();
        assert!((u - 0.335_432_098_765_432_1).abs() < 1e-15, "{u}");
    }

    #[test]
    fn potential_gradient_matches_force() {
        let p = params(0.3, -0.2, 1.4, 1.1);
        let h = 1e-5;
        let q = 0.7;
        let fd = -(p.effective_potential(q + h).unwrap() - p.effective_potential(q - h).unwrap())
            / (2.0 * h);
        assert!((fd - p.acceleration(q).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn equilibria() {
        // roots of the acceleration from mpmath.findroot
        let cases = [
            (0.01, 0.0, 1.0, 1.0, 1.009_714_147_116_319_2),
            (0.01, 2.0, 1.0, 3.0, 3.196_096_206_167_177),
            (0.01, -2.0, 1.0, 3.0, 2.732_660_391_977_311_8),
        ];
        for (c, d, w, q0, want) in cases {
            let p = params(c, d, w, q0);
            let q = equilibrium(&p).unwrap();
            assert!((q - want).abs() < 1e-12, "{q} vs {want}");
            assert!(p.acceleration(q).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn equilibrium_needs_a_spring() {
        assert!(equilibrium(&params(0.1, 0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn harmonic_turning_points() {
        let p = params(0.0, 0.0, 2.0, 1.5);
        let amp = 0.4;
        let (l, r) = turning_points(0.5 * 4.0 * amp * amp, &p).unwrap();
        assert!((l - 1.1).abs() < 1e-12 && (r - 1.9).abs() < 1e-12);
    }

    #[test]
    fn energy_below_minimum() {
        let p = params(0.01, 0.0, 1.0, 1.0);
        let q = equilibrium(&p).unwrap();
        let u = p.effective_potential(q).unwrap();
        assert!(matches!(
            turning_points(u - 1e-6, &p),
            Err(Error::EnergyBelowMinimum { .. })
        ));
    }

    #[test]
    fn figure_turning_points() {
        let p = params(0.01, 0.0, 1.0, 1.0);
        let e = p.effective_potential(1.1).unwrap();
        let (l, r) = turning_points(e, &p).unwrap();
        assert!((l - 0.919_732_645_383_680_3).abs() < 1e-12);
        assert!((r - 1.1).abs() < 1e-12);
        assert!((p.effective_potential(l).unwrap() - e).abs() < 1e-12);

        let p = params(0.1, 0.0, 1.0, 1.0);
        let e = p.effective_potential(1.8).unwrap();
        let (l, _) = turning_points(e, &p).unwrap();
        assert!((l - 0.492_116_413_661_072_4).abs() < 1e-12);
    }
}
