//! Dormand–Prince 5(4) (autonomous form) with PI step control and the fourth-order continuous
//! extension for dense output.

use super::{OscillatorParams, WallState};
use crate::{Error, Result};

/// Local errors are held this far below the requested tolerance so that the
/// global energy error, which accumulates over thousands of steps on long
/// runs with small total energy, stays below `100 * tol` relative.
const LOCAL_TOL_SCALE: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorOptions {
    /// Relative and absolute local error tolerance.
    pub tol: f64,
    /// Spacing of the dense-output samples.
    pub sample_dt: f64,
    /// The run aborts once the wall comes closer than this to `Q = 0`.
    pub q_guard: f64,
    pub max_steps: usize,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            sample_dt: 0.01,
            q_guard: 1e-6,
            max_steps: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryStats {
    pub q_min: f64,
    pub q_max: f64,
    /// `(q_min + q_max) / 2`.
    pub midpoint: f64,
    /// Trapezoidal time average of `Q` over the samples.
    pub time_mean_q: f64,
    /// Largest `|e(t) − e(0)| / |e(0)|` over accepted steps.
    pub energy_drift: f64,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<WallState>,
    pub stats: TrajectoryStats,
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const SAFETY: f64 = 0.9;
const BETA: f64 = 0.04;
const EXPO: f64 = 0.2 - BETA * 0.75;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;

type Vec2 = [f64; 2];

fn axpy(y: &Vec2, h: f64, terms: &[(f64, &Vec2)]) -> Vec2 {
    let mut out = *y;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

struct Rhs<'a> {
    p: &'a OscillatorParams,
}

impl Rhs<'_> {
    /// NaN when a stage leaves `Q > 0`; the step is then rejected.
    fn eval(&self, y: &Vec2) -> Vec2 {
        if y[0] > 0.0 {
            [y[1], self.p.accel_unchecked(y[0])]
        } else {
            [f64::NAN, f64::NAN]
        }
    }
}

/// Continuous extension of one accepted step.
struct Dense {
    t: f64,
    h: f64,
    r: [Vec2; 5],
}

impl Dense {
    fn eval(&self, t: f64) -> Vec2 {
        let s = (t - self.t) / self.h;
        let s1 = 1.0 - s;
        std::array::from_fn(|i| {
            let r = |k: usize| self.r[k][i];
            r(0) + s * (r(1) + s1 * (r(2) + s * (r(3) + s1 * r(4))))
        })
    }
}

/// Integrates the wall from `init` to `t_end`, sampling the dense output
/// every `opts.sample_dt` (plus the end point).
pub fn integrate(
    init: WallState,
    p: &OscillatorParams,
    t_end: f64,
    opts: &IntegratorOptions,
) -> Result<Trajectory> {
    if !(init.q > 0.0) || !init.q.is_finite() || !init.qdot.is_finite() {
        return Err(Error::domain("initial wall position", init.q));
    }
    if !(t_end > init.t) || !t_end.is_finite() {
        return Err(Error::domain("end time", t_end));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::domain("tolerance", opts.tol));
    }
    if !(opts.sample_dt > 0.0) {
        return Err(Error::domain("sample interval", opts.sample_dt));
    }
    if init.q < opts.q_guard {
        return Err(Error::Singularity { last: init });
    }

    let rhs = Rhs { p };
    let tol = opts.tol * LOCAL_TOL_SCALE;
    let e0 = p.energy(&init)?;
    let e_scale = if e0 != 0.0 { e0.abs() } else { 1.0 };
    let mut drift: f64 = 0.0;

    let span = t_end - init.t;
    let n_samples = ((span / opts.sample_dt) + 1e-9).floor() as usize;
    let sample_time = |k: usize| (init.t + k as f64 * opts.sample_dt).min(t_end);
    let mut samples = Vec::with_capacity(n_samples + 2);
    samples.push(init);
    let mut next_sample = 1usize;

    let mut t = init.t;
    let mut y: Vec2 = [init.q, init.qdot];
    let mut k1 = rhs.eval(&y);
    let mut h = initial_step(&rhs, &y, &k1, tol, span);
    let mut fac_old: f64 = 1e-4;
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    let mut last_rejected = false;

    while t < t_end {
        if accepted + rejected >= opts.max_steps {
            return Err(Error::NonConvergence {
                what: "wall integration step budget",
                best: t,
            });
        }
        let last = WallState::new(t, y[0], y[1]);
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::StepUnderflow { last });
        }
        let final_step = t + h >= t_end;
        if final_step {
            h = t_end - t;
        }

        let k2 = rhs.eval(&axpy(&y, h, &[(A21, &k1)]));
        let k3 = rhs.eval(&axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs.eval(&axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = rhs.eval(&axpy(
            &y,
            h,
            &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)],
        ));
        let k6 = rhs.eval(&axpy(
            &y,
            h,
            &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
        ));
        let y_new = axpy(
            &y,
            h,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let k7 = rhs.eval(&y_new);

        let mut err_sq = 0.0;
        for i in 0..2 {
            let e =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = tol + tol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / sc).powi(2);
        }
        let err = (0.5 * err_sq).sqrt();

        if !err.is_finite() {
            rejected += 1;
            last_rejected = true;
            h *= 0.25;
            continue;
        }

        let fac11 = err.powf(EXPO);
        if err <= 1.0 {
            let t_new = if final_step { t_end } else { t + h };
            if y_new[0] < opts.q_guard {
                return Err(Error::Singularity { last });
            }
            let dense = Dense {
                t,
                h,
                r: dense_coefficients(&y, &y_new, h, [&k1, &k3, &k4, &k5, &k6, &k7]),
            };
            while next_sample <= n_samples && sample_time(next_sample) <= t_new {
                let ts = sample_time(next_sample);
                let ys = if ts == t_new { y_new } else { dense.eval(ts) };
                if ys[0] < opts.q_guard {
                    return Err(Error::Singularity { last });
                }
                samples.push(WallState::new(ts, ys[0], ys[1]));
                next_sample += 1;
            }

            let e = 0.5 * y_new[1] * y_new[1] + p.potential_unchecked(y_new[0]);
            drift = drift.max((e - e0).abs() / e_scale);

            let fac = (fac11 / fac_old.powf(BETA) / SAFETY).clamp(1.0 / FAC_MAX, 1.0 / FAC_MIN);
            fac_old = err.max(1e-4);
            let mut h_new = h / fac;
            if last_rejected {
                h_new = h_new.min(h);
            }
            t = t_new;
            y = y_new;
            k1 = k7;
            h = h_new;
            accepted += 1;
            last_rejected = false;
        } else {
            h /= (fac11 / SAFETY).min(1.0 / FAC_MIN);
            rejected += 1;
            last_rejected = true;
        }
    }

    if samples.last().is_none_or(|s| s.t < t_end) {
        samples.push(WallState::new(t_end, y[0], y[1]));
    }

    let stats = summarize(&samples, drift, accepted, rejected);
    Ok(Trajectory { samples, stats })
}

fn dense_coefficients(y: &Vec2, y_new: &Vec2, h: f64, k: [&Vec2; 6]) -> [Vec2; 5] {
    let [k1, k3, k4, k5, k6, k7] = k;
    let mut r = [[0.0; 2]; 5];
    for i in 0..2 {
        let dy = y_new[i] - y[i];
        let bspl = h * k1[i] - dy;
        r[0][i] = y[i];
        r[1][i] = dy;
        r[2][i] = bspl;
        r[3][i] = dy - h * k7[i] - bspl;
        r[4][i] = h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
    }
    r
}

fn initial_step(rhs: &Rhs<'_>, y: &Vec2, f0: &Vec2, tol: f64, span: f64) -> f64 {
    let norm = |v: &Vec2| {
        let s: f64 = (0..2)
            .map(|i| (v[i] / (tol + tol * y[i].abs())).powi(2))
            .sum();
        (0.5 * s).sqrt()
    };
    let d0 = norm(y);
    let d1 = norm(f0);
    let mut h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    h0 = h0.min(span);
    let y1 = axpy(y, h0, &[(1.0, f0)]);
    let f1 = rhs.eval(&y1);
    let d2 = norm(&[f1[0] - f0[0], f1[1] - f0[1]]) / h0;
    let h1 = if !d2.is_finite() {
        h0 * 1e-3
    } else if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(span)
}

fn summarize(
    samples: &[WallState],
    drift: f64,
    accepted: usize,
    rejected: usize,
) -> TrajectoryStats {
    let (q_min, q_max) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.q), hi.max(s.q))
        });
    let area: f64 = samples
        .windows(2)
        .map(|w| 0.5 * (w[0].q + w[1].q) * (w[1].t - w[0].t))
        .sum();
    let duration = samples.last().unwrap().t - samples[0].t;
    TrajectoryStats {
        q_min,
        q_max,
        midpoint: 0.5 * (q_min + q_max),
        time_mean_q: area / duration,
        energy_drift: drift,
        steps_accepted: accepted,
        steps_rejected: rejected,
    }
}
