use crate::{Error, Result};

pub const DEFAULT_SUBINTERVAL_BUDGET: usize = 1_000_000;

// Levels subdivided unconditionally before the error test is trusted; a
// single Simpson panel can vanish by symmetry on periodic integrands.
const MIN_DEPTH: u32 = 4;
const MAX_DEPTH: u32 = 60;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` with absolute tolerance
/// `tol`, using the default budget of 10⁶ subintervals.
pub fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    quad_with_budget(f, a, b, tol, DEFAULT_SUBINTERVAL_BUDGET)
}

pub fn quad_with_budget<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    budget: usize,
) -> Result<f64> {
    if !(a <= b) {
        return Err(Error::domain("quadrature interval", b - a));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("quadrature tolerance", tol));
    }
    if a == b {
        return Ok(0.0);
    }

    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        tol,
        depth: 0,
    }];
    let mut total = 0.0;
    let mut compensation = 0.0;
    let mut processed = 0usize;
    let mut converged = true;

    while let Some(p) = stack.pop() {
        processed += 1;
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;

        let accept = p.depth >= MIN_DEPTH && delta.abs() <= 15.0 * p.tol;
        let exhausted = p.depth >= MAX_DEPTH || processed >= budget || m <= p.a || m >= p.b;
        if accept || exhausted {
            if !accept {
                converged = false;
            }
            // Kahan summation of the accepted panels
            let y = left + right + delta / 15.0 - compensation;
            let t = total + y;
            compensation = (t - total) - y;
            total = t;
            continue;
        }
        if !total.is_finite() || !delta.is_finite() {
            return Err(Error::NonConvergence {
                what: "quadrature",
                best: total,
            });
        }
        let half = 0.5 * p.tol;
        stack.push(Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
            tol: half,
            depth: p.depth + 1,
        });
        stack.push(Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
            tol: half,
            depth: p.depth + 1,
        });
    }

    if converged && total.is_finite() {
        Ok(total)
    } else {
        Err(Error::NonConvergence {
            what: "quadrature",
            best: total,
        })
    }
}
