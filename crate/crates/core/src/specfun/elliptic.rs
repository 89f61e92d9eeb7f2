use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

const MAX_AGM_ITER: usize = 64;

/// Complete elliptic integrals at parameter `m`, carried together with the
/// AGM tail sum so that the small differences `K − E` and `E − (1−m)K` come
/// out without cancellation.
///
/// With the AGM sequence `a₀ = 1`, `b₀ = √(1−m)`, `c₀ = √m`,
/// `cₙ₊₁ = cₙ²/(4aₙ₊₁)`, the second-kind integral is
/// `E = K (1 − m/2 − Σₙ≥₁ 2ⁿ⁻¹ cₙ²)`. The tail is stored rescaled as
/// `tail = Σₙ≥₁ 2ⁿ⁻¹ (cₙ/m)²`, which tends to `1/16` as `m → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompleteIntegrals {
    pub m: f64,
    pub k: f64,
    tail: f64,
}

impl CompleteIntegrals {
    pub fn new(m: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&m) {
            return Err(Error::domain("elliptic parameter", m));
        }
        let mut a = 1.0;
        let mut b = (1.0 - m).sqrt();
        // r = c_n / m; c_1 = m / (2 (1 + √(1−m)))
        let mut r = 0.5 / (1.0 + b);
        let mut tail = 0.0;
        let mut weight = 1.0;
        for _ in 0..MAX_AGM_ITER {
            let a_next = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = a_next;
            tail += weight * r * r;
            if r * m <= f64::EPSILON * a {
                break;
            }
            weight *= 2.0;
            // c_{n+1} = c_n² / (4 a_{n+1})
            r = m * r * r / (2.0 * (a + b));
        }
        Ok(Self {
            m,
            k: FRAC_PI_2 / a,
            tail,
        })
    }

    pub fn e(&self) -> f64 {
        self.k - self.k_minus_e()
    }

    /// `K − E = K m (1/2 + m·tail)`.
    pub fn k_minus_e(&self) -> f64 {
        self.k * self.m * (0.5 + self.m * self.tail)
    }

    /// `E − (1 − m) K = K m (1/2 − m·tail)`.
    pub fn e_minus_complement(&self) -> f64 {
        self.k * self.m * (0.5 - self.m * self.tail)
    }

    pub(crate) fn tail(&self) -> f64 {
        self.tail
    }
}

/// Complete elliptic integral of the first kind, `K(m)`, for `0 ≤ m < 1`.
pub fn ellip_k(m: f64) -> Result<f64> {
    CompleteIntegrals::new(m).map(|ci| ci.k)
}

/// Complete elliptic integral of the second kind, `E(m)`, for `0 ≤ m ≤ 1`.
pub fn ellip_e(m: f64) -> Result<f64> {
    if m == 1.0 {
        return Ok(1.0);
    }
    CompleteIntegrals::new(m)
        .map(|ci| ci.e())
        .map_err(|_| Error::domain("elliptic parameter", m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn values_at_zero() {
        assert_eq!(ellip_k(0.0).unwrap(), PI / 2.0);
        assert!((ellip_e(0.0).unwrap() - PI / 2.0).abs() < 1e-16);
        assert_eq!(ellip_e(1.0).unwrap(), 1.0);
    }

    #[test]
    fn reference_values_at_half() {
        // mpmath.ellipk / ellipe at 30 digits
        let k = ellip_k(0.5).unwrap();
        let e = ellip_e(0.5).unwrap();
        assert!((k - 1.854_074_677_301_371_9).abs() < 1e-14 * k);
        assert!((e - 1.350_643_881_047_675_5).abs() < 1e-14 * e);
    }

    #[test]
    fn log_asymptote_near_one() {
        let m = 1.0 - 1e-16;
        let k = ellip_k(m).unwrap();
        let asym = 0.5 * (16.0 / (1.0 - m)).ln();
        assert!(k.is_finite() && k > 19.0);
        assert!((k - asym).abs() < 1e-3, "{k} vs {asym}");
    }

    #[test]
    fn domain_errors() {
        assert!(ellip_k(-0.1).is_err());
        assert!(ellip_k(1.0).is_err());
        assert!(ellip_e(1.5).is_err());
        assert!(ellip_e(-1e-3).is_err());
        assert!(ellip_k(f64::NAN).is_err());
    }

    #[test]
    fn small_differences_keep_precision() {
        let m = 1e-9;
        let ci = CompleteIntegrals::new(m).unwrap();
        // K − E = (π/4) m (1 + 3m/8 + …)
        let series = PI / 4.0 * m * (1.0 + 3.0 * m / 8.0);
        assert!((ci.k_minus_e() - series).abs() < 1e-15 * series);
        // E − (1−m)K = (π/4) m (1 + m/8 + …)
        let series = PI / 4.0 * m * (1.0 + m / 8.0);
        assert!((ci.e_minus_complement() - series).abs() < 1e-15 * series);
    }
}
