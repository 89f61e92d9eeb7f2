//! Bracketed scalar root finding shared by the solvers.

use crate::{Error, Result};

const MAX_ITER: usize = 500;

/// Root of `f` in `[lo, hi]` given a sign change, by bisection with secant
/// steps accepted only when they land inside the bracket and the previous
/// step at least halved it. Iterates until the bracket is down to `xtol` or
/// to adjacent floating point numbers.
pub(crate) fn bisect_secant<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    what: &'static str,
) -> Result<f64> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::NonConvergence {
            what,
            best: 0.5 * (lo + hi),
        });
    }
    let mut last_width = hi - lo;
    let mut use_secant = true;
    for _ in 0..MAX_ITER {
        let width = hi - lo;
        let mid = lo + 0.5 * width;
        if width <= xtol || mid <= lo || mid >= hi {
            break;
        }
        let mut x = mid;
        if use_secant {
            let s = hi - fhi * (hi - lo) / (fhi - flo);
            if s > lo && s < hi && s.is_finite() {
                x = s;
            }
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        let new_width = hi - lo;
        use_secant = new_width <= 0.5 * last_width;
        last_width = new_width;
    }
    Ok(if flo.abs() <= fhi.abs() { lo } else { hi })
}
