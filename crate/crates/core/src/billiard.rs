//! Classical comparison: a point atom bouncing elastically between a fixed
//! wall at `q = 0` and a harmonically bound piston at `Q`.
//!
//! Between events both bodies move analytically (free flight for the atom,
//! a sinusoid for the piston), so energy is only ever touched by the
//! collision rule.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Separation applied after an impact so it is not detected again.
pub const PUSH_OFF: f64 = 1e-12;
/// Relative speeds below this are treated as no collision.
pub const MIN_APPROACH_SPEED: f64 = 1e-12;
/// Event times are bracketed down to this width.
pub const EVENT_TIME_TOL: f64 = 1e-12;
pub const MAX_EVENTS: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilliardState {
    pub t: f64,
    /// Atom position.
    pub q: f64,
    /// Atom velocity.
    pub v: f64,
    /// Piston position.
    pub wall_q: f64,
    /// Piston velocity.
    pub wall_v: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilliardParams {
    pub m_atom: f64,
    pub m_wall: f64,
    pub omega: f64,
    pub q0: f64,
}

impl BilliardParams {
    pub fn new(m_atom: f64, m_wall: f64, omega: f64, q0: f64) -> Result<Self> {
        for (what, v) in [
            ("atom mass", m_atom),
            ("wall mass", m_wall),
            ("wall frequency", omega),
            ("wall equilibrium", q0),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(what, v));
            }
        }
        Ok(Self {
            m_atom,
            m_wall,
            omega,
            q0,
        })
    }

    /// `½mv² + ½MV² + ½Mω²(Q − Q₀)²`.
    pub fn energy(&self, s: &BilliardState) -> f64 {
        0.5 * self.m_atom * s.v * s.v
            + 0.5
                * self.m_wall
                * (s.wall_v * s.wall_v + (self.omega * (s.wall_q - self.q0)).powi(2))
    }

    pub fn momentum(&self, s: &BilliardState) -> f64 {
        self.m_atom * s.v + self.m_wall * s.wall_v
    }
}

/// Velocities after a one-dimensional elastic collision.
pub fn collide(v: f64, wall_v: f64, m: f64, wall_m: f64) -> (f64, f64) {
    let total = m + wall_m;
    (
        ((m - wall_m) * v + 2.0 * wall_m * wall_v) / total,
        ((wall_m - m) * wall_v + 2.0 * m * v) / total,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    /// Atom hits the piston.
    WallImpact,
    /// Atom reflects off the fixed wall at `q = 0`.
    FixedWall,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub kind: EventKind,
    pub before: BilliardState,
    pub after: BilliardState,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilliardOptions {
    pub sample_dt: f64,
    /// Keep the per-event log.
    pub log_events: bool,
    pub max_events: u64,
}

impl Default for BilliardOptions {
    fn default() -> Self {
        Self {
            sample_dt: 0.01,
            log_events: true,
            max_events: MAX_EVENTS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilliardStats {
    pub impacts: u64,
    pub reflections: u64,
    pub wall_q_min: f64,
    pub wall_q_max: f64,
    pub wall_midpoint: f64,
    pub wall_time_mean: f64,
    /// Largest `|E(t) − E(0)| / E(0)` seen at events and samples.
    pub energy_drift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BilliardRun {
    pub samples: Vec<BilliardState>,
    pub events: Vec<Event>,
    pub stats: BilliardStats,
}

/// Analytic motion between events.
fn propagate(s: &BilliardState, p: &BilliardParams, dt: f64) -> BilliardState {
    let (sin, cos) = (p.omega * dt).sin_cos();
    let x = s.wall_q - p.q0;
    BilliardState {
        t: s.t + dt,
        q: s.q + s.v * dt,
        v: s.v,
        wall_q: p.q0 + x * cos + s.wall_v / p.omega * sin,
        wall_v: -x * p.omega * sin + s.wall_v * cos,
    }
}

/// Gap `Q(τ) − q(τ)` and its derivative, with a curvature bound, for
/// locating the next impact.
struct Gap<'a> {
    s: &'a BilliardState,
    p: &'a BilliardParams,
    curvature: f64,
}

impl<'a> Gap<'a> {
    fn new(s: &'a BilliardState, p: &'a BilliardParams) -> Self {
        let x = s.wall_q - p.q0;
        let amplitude = x.hypot(s.wall_v / p.omega);
        Self {
            s,
            p,
            curvature: p.omega * p.omega * amplitude,
        }
    }

    fn value(&self, tau: f64) -> f64 {
        let n = propagate(self.s, self.p, tau);
        n.wall_q - n.q
    }

    fn slope(&self, tau: f64) -> f64 {
        let n = propagate(self.s, self.p, tau);
        n.wall_v - n.v
    }

    /// Lower bound of the gap over `[a, b]` from the endpoint values, the
    /// slope at `a` and the curvature bound.
    fn lower_bound(&self, a: f64, b: f64, fa: f64, fb: f64) -> f64 {
        let h = b - a;
        let chord = fa.min(fb) - self.curvature * h * h / 8.0;
        let taylor = fa.min(fa + self.slope(a) * h - 0.5 * self.curvature * h * h);
        chord.max(taylor)
    }

    /// First `τ ∈ (0, horizon]` with a closing gap, bracketed to
    /// [`EVENT_TIME_TOL`]; the returned time is the right end of the
    /// bracket, where the gap is `≤ 0`.
    fn first_contact(&self, horizon: f64) -> Option<f64> {
        let coarse = (PI / 8.0 / self.p.omega).min(horizon);
        let mut a = 0.0;
        let mut fa = self.value(0.0);
        while a < horizon {
            let b = (a + coarse).min(horizon);
            let fb = self.value(b);
            if let Some(t) = self.search(a, b, fa, fb, 0) {
                return Some(t);
            }
            a = b;
            fa = fb;
        }
        None
    }

    fn search(&self, a: f64, b: f64, fa: f64, fb: f64, depth: u32) -> Option<f64> {
        if fb <= 0.0 {
            return Some(self.refine(a, b));
        }
        if self.lower_bound(a, b, fa, fb) > 0.0 || depth > 60 || b - a <= EVENT_TIME_TOL {
            return None;
        }
        let mid = 0.5 * (a + b);
        let fm = self.value(mid);
        self.search(a, mid, fa, fm, depth + 1)
            .or_else(|| self.search(mid, b, fm, fb, depth + 1))
    }

    fn refine(&self, mut a: f64, mut b: f64) -> f64 {
        while b - a > EVENT_TIME_TOL {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if self.value(mid) > 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        b
    }
}

/// Runs the event-driven simulation from `init` to `t_end`.
pub fn simulate(
    init: BilliardState,
    p: &BilliardParams,
    t_end: f64,
    opts: &BilliardOptions,
) -> Result<BilliardRun> {
    if !(init.wall_q > 0.0) || !(init.q >= 0.0) || init.q > init.wall_q {
        return Err(Error::domain("atom position", init.q));
    }
    if !init.v.is_finite() || !init.wall_v.is_finite() {
        return Err(Error::domain("velocity", init.v + init.wall_v));
    }
    if !(t_end > init.t) || !t_end.is_finite() {
        return Err(Error::domain("end time", t_end));
    }
    if !(opts.sample_dt > 0.0) {
        return Err(Error::domain("sample interval", opts.sample_dt));
    }

    let e0 = p.energy(&init);
    let e_scale = if e0 > 0.0 { e0 } else { 1.0 };
    let mut drift: f64 = 0.0;
    let n_samples = (((t_end - init.t) / opts.sample_dt) + 1e-9).floor() as usize;
    let sample_time = |k: usize| (init.t + k as f64 * opts.sample_dt).min(t_end);
    let mut samples = Vec::with_capacity(n_samples + 2);
    samples.push(init);
    let mut next_sample = 1usize;

    let mut events = Vec::new();
    let mut impacts = 0u64;
    let mut reflections = 0u64;
    let mut s = init;

    loop {
        let remaining = t_end - s.t;
        let to_fixed = if s.v < 0.0 { -s.q / s.v } else { f64::INFINITY };
        let horizon = remaining.min(to_fixed);
        let contact = Gap::new(&s, p).first_contact(horizon);
        let (dt, kind) = match contact {
            Some(tau) => (tau, Some(EventKind::WallImpact)),
            None if to_fixed <= remaining => (to_fixed, Some(EventKind::FixedWall)),
            None => (remaining, None),
        };

        while next_sample <= n_samples && sample_time(next_sample) - s.t <= dt {
            let sample = propagate(&s, p, sample_time(next_sample) - s.t);
            drift = drift.max((p.energy(&sample) - e0).abs() / e_scale);
            samples.push(BilliardState {
                q: sample.q.clamp(0.0, sample.wall_q),
                ..sample
            });
            next_sample += 1;
        }

        let Some(kind) = kind else {
            let last = propagate(&s, p, dt);
            if samples.last().is_none_or(|x| x.t < t_end) {
                samples.push(BilliardState { t: t_end, ..last });
            }
            break;
        };

        if impacts + reflections >= opts.max_events {
            return Err(Error::EventAccumulation {
                last: s,
                reason: "event budget exhausted",
            });
        }
        if dt <= 0.0 && kind == EventKind::WallImpact {
            return Err(Error::EventAccumulation {
                last: s,
                reason: "zero inter-event time",
            });
        }

        let mut before = propagate(&s, p, dt);
        let mut after = before;
        match kind {
            EventKind::WallImpact => {
                before.q = before.wall_q;
                after.q = before.wall_q;
                if before.v - before.wall_v > MIN_APPROACH_SPEED {
                    let (v, wall_v) = collide(before.v, before.wall_v, p.m_atom, p.m_wall);
                    after.v = v;
                    after.wall_v = wall_v;
                }
                after.q = (after.wall_q - PUSH_OFF).max(0.0);
                impacts += 1;
            }
            EventKind::FixedWall => {
                before.q = 0.0;
                after.q = 0.0;
                after.v = -before.v;
                reflections += 1;
            }
        }
        drift = drift.max((p.energy(&after) - e0).abs() / e_scale);
        if opts.log_events {
            events.push(Event {
                kind,
                before,
                after,
            });
        }
        s = after;
    }

    let (lo, hi) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
            (lo.min(x.wall_q), hi.max(x.wall_q))
        });
    let area: f64 = samples
        .windows(2)
        .map(|w| 0.5 * (w[0].wall_q + w[1].wall_q) * (w[1].t - w[0].t))
        .sum();
    let stats = BilliardStats {
        impacts,
        reflections,
        wall_q_min: lo,
        wall_q_max: hi,
        wall_midpoint: 0.5 * (lo + hi),
        wall_time_mean: area / (t_end - init.t),
        energy_drift: drift,
    };
    Ok(BilliardRun {
        samples,
        events,
        stats,
    })
}

/// Time-averaged force of an atom of speed `v` bouncing against a pinned
/// wall at distance `q`, counted impact by impact over `horizon`, starting
/// from the fixed wall. Tends to `m v²/Q`.
pub fn fixed_wall_pressure(v: f64, q: f64, m: f64, horizon: f64) -> Result<f64> {
    for (what, x) in [
        ("speed", v),
        ("length", q),
        ("mass", m),
        ("horizon", horizon),
    ] {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::domain(what, x));
        }
    }
    let mut t = q / v;
    let mut impulse = 0.0;
    while t <= horizon {
        impulse += 2.0 * m * v;
        t += 2.0 * q / v;
    }
    Ok(impulse / horizon)
}
