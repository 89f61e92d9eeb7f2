//! C ABI over `matterwave`.
//!
//! Every fallible call returns an [`MwStatus`]; on failure a description is
//! available from [`mw_last_error`] on the same thread. Results are written
//! through out-pointers. Modes, trajectories and billiard runs are opaque
//! handles that must be released with their `_free` function.
//!
//! The header `include/matterwave.h` is regenerated by the build script.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use matterwave::atom_box::{coefficient_b, BoxParams, QuantumPopulations};
use matterwave::billiard::{self, BilliardOptions, BilliardParams, BilliardRun, BilliardState};
use matterwave::dynamics::{self, IntegratorOptions, OscillatorParams, Trajectory, WallState};
use matterwave::gp_modes::{build_mode, Branch, GpMode};
use matterwave::scenario::{self, ScenarioConfig, ScenarioError};
use matterwave::specfun::{self, PowerKind};
use matterwave::{Error, ForceCoefficients};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MwStatus {
    Ok = 0,
    NullPointer = 1,
    /// Argument outside the domain of the call, or malformed input.
    InvalidArgument = 2,
    NonConvergence = 3,
    /// The wall reached the guard length.
    Singularity = 4,
    StepUnderflow = 5,
    NoStableRoot = 6,
    EnergyBelowMinimum = 7,
    EventAccumulation = 8,
    /// Scenario configuration rejected.
    Config = 9,
    Io = 10,
    /// A Rust panic was caught at the boundary.
    Panic = 11,
}

impl From<&Error> for MwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. } | Error::Populations(_) => MwStatus::InvalidArgument,
            Error::NonConvergence { .. } => MwStatus::NonConvergence,
            Error::Singularity { .. } => MwStatus::Singularity,
            Error::StepUnderflow { .. } => MwStatus::StepUnderflow,
            Error::NoStableRoot => MwStatus::NoStableRoot,
            Error::EnergyBelowMinimum { .. } => MwStatus::EnergyBelowMinimum,
            Error::EventAccumulation { .. } => MwStatus::EventAccumulation,
            // the core enum may grow
            #[allow(unreachable_patterns)]
            _ => MwStatus::InvalidArgument,
        }
    }
}

struct Failure(MwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(MwStatus::from(&e), e.to_string())
    }
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        let status = match &e {
            ScenarioError::Config(_) => MwStatus::Config,
            ScenarioError::Numerical(inner) => MwStatus::from(inner),
            ScenarioError::Io { .. } => MwStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MwStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            MwStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(MwStatus::NullPointer, "null pointer argument".into())
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(null)
}

unsafe fn arg<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn c_str(p: *const c_char) -> Result<String, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map(str::to_owned)
        .map_err(|_| Failure(MwStatus::InvalidArgument, "string is not UTF-8".into()))
}

/// Message of the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mw_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwBoxParams {
    pub m_atom: f64,
    pub m_wall: f64,
    pub hbar: f64,
}

impl MwBoxParams {
    fn to_core(self) -> Result<BoxParams, Failure> {
        Ok(BoxParams::new(self.m_atom, self.m_wall, self.hbar)?)
    }
}

/// `m_atom = m_wall = hbar = 1`.
#[no_mangle]
pub extern "C" fn mw_box_params_default() -> MwBoxParams {
    let p = BoxParams::default();
    MwBoxParams {
        m_atom: p.m_atom,
        m_wall: p.m_wall,
        hbar: p.hbar,
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MwForceCoefficients {
    pub c: f64,
    pub d: f64,
}

impl From<ForceCoefficients> for MwForceCoefficients {
    fn from(f: ForceCoefficients) -> Self {
        Self { c: f.c, d: f.d }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MwJacobi {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MwPowerKind {
    Sn2 = 0,
    Sn4 = 1,
    Cn2 = 2,
    Cn4 = 3,
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_ellip_k(m: f64, out: *mut f64) -> MwStatus {
    guard(|| {
        *self::out(out)? = specfun::ellip_k(m)?;
        Ok(())
    })
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_ellip_e(m: f64, out: *mut f64) -> MwStatus {
    guard(|| {
        *self::out(out)? = specfun::ellip_e(m)?;
        Ok(())
    })
}

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_jacobi_sn_cn_dn(z: f64, m: f64, out: *mut MwJacobi) -> MwStatus {
    guard(|| {
        let t = specfun::jacobi_sn_cn_dn(z, m)?;
        *self::out(out)? = MwJacobi {
            sn: t.sn,
            cn: t.cn,
            dn: t.dn,
        };
        Ok(())
    })
}

/// Quarter-period integral of `sn²`, `sn⁴`, `cn²` or `cn⁴` for `0 < m < 1`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_power_integral(kind: MwPowerKind, m: f64, out: *mut f64) -> MwStatus {
    guard(|| {
        let kind = match kind {
            MwPowerKind::Sn2 => PowerKind::Sn2,
            MwPowerKind::Sn4 => PowerKind::Sn4,
            MwPowerKind::Cn2 => PowerKind::Cn2,
            MwPowerKind::Cn4 => PowerKind::Cn4,
        };
        *self::out(out)? = specfun::power_integral(kind, m)?;
        Ok(())
    })
}

/// Drive coefficient of an atom with level `levels[i]` occupied with
/// probability `probs[i]`; the probabilities must sum to one.
///
/// # Safety
/// `levels` and `probs` must point to `n` readable elements; `params` and
/// `out` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn mw_atom_coefficient(
    levels: *const u32,
    probs: *const f64,
    n: usize,
    params: *const MwBoxParams,
    out: *mut MwForceCoefficients,
) -> MwStatus {
    guard(|| {
        if levels.is_null() || probs.is_null() {
            return Err(null());
        }
        let levels = std::slice::from_raw_parts(levels, n);
        let probs = std::slice::from_raw_parts(probs, n);
        let pop =
            QuantumPopulations::new(levels.iter().copied().zip(probs.iter().copied()).collect())?;
        let params = arg(params)?.to_core()?;
        *self::out(out)? = coefficient_b(&pop, &params).into();
        Ok(())
    })
}

/// Stationary condensate mode.
pub struct MwGpMode(GpMode);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MwBranch {
    Repulsive = 0,
    Attractive = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwGpModeInfo {
    pub branch: MwBranch,
    pub j: u32,
    pub m_param: f64,
    pub a: f64,
    pub b: f64,
    pub delta: f64,
    pub g: f64,
    pub q: f64,
    /// Chemical potential.
    pub u: f64,
    /// Kinetic prefactor `hbar² / (2 m_atom)`.
    pub kappa: f64,
}

/// Solves mode `j` for coupling `g` in a box of length `q`.
///
/// # Safety
/// `params` must be null or valid; `out` must be null or valid for writes.
/// The handle written to `out` must be released with [`mw_gp_mode_free`].
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_new(
    g: f64,
    q: f64,
    j: u32,
    params: *const MwBoxParams,
    out: *mut *mut MwGpMode,
) -> MwStatus {
    guard(|| {
        let slot = self::out(out)?;
        *slot = ptr::null_mut();
        let params = arg(params)?.to_core()?;
        let mode = build_mode(g, q, j, &params)?;
        *slot = Box::into_raw(Box::new(MwGpMode(mode)));
        Ok(())
    })
}

/// # Safety
/// `mode` must be null or a handle from [`mw_gp_mode_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_free(mode: *mut MwGpMode) {
    if !mode.is_null() {
        drop(Box::from_raw(mode));
    }
}

/// # Safety
/// `mode` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_info(
    mode: *const MwGpMode,
    out: *mut MwGpModeInfo,
) -> MwStatus {
    guard(|| {
        let m = &arg(mode)?.0;
        *self::out(out)? = MwGpModeInfo {
            branch: match m.branch {
                Branch::Repulsive => MwBranch::Repulsive,
                Branch::Attractive => MwBranch::Attractive,
            },
            j: m.j,
            m_param: m.m_param,
            a: m.a,
            b: m.b,
            delta: m.delta,
            g: m.g,
            q: m.q,
            u: m.u,
            kappa: m.kappa,
        };
        Ok(())
    })
}

/// Wavefunction at `x` in `[0, Q]`.
///
/// # Safety
/// `mode` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_psi(mode: *const MwGpMode, x: f64, out: *mut f64) -> MwStatus {
    guard(|| {
        *self::out(out)? = arg(mode)?.0.wavefunction(x)?;
        Ok(())
    })
}

/// Scaled residual of the stationary equation on the interior grid.
///
/// # Safety
/// `mode` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_residual(mode: *const MwGpMode, out: *mut f64) -> MwStatus {
    guard(|| {
        *self::out(out)? = arg(mode)?.0.gp_residual();
        Ok(())
    })
}

/// # Safety
/// `mode` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_gp_mode_force_coefficients(
    mode: *const MwGpMode,
    m_wall: f64,
    out: *mut MwForceCoefficients,
) -> MwStatus {
    guard(|| {
        if !(m_wall > 0.0) || !m_wall.is_finite() {
            return Err(Error::Domain {
                what: "wall mass",
                value: m_wall,
            }
            .into());
        }
        *self::out(out)? = arg(mode)?.0.force_coefficients(m_wall).into();
        Ok(())
    })
}

/// Wall equation `Q'' = c/Q³ + d/Q² − omega²(Q − q0)`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwOscillator {
    pub omega: f64,
    pub q0: f64,
    pub c: f64,
    pub d: f64,
}

impl MwOscillator {
    fn to_core(self) -> Result<OscillatorParams, Failure> {
        Ok(OscillatorParams::new(
            self.omega,
            self.q0,
            ForceCoefficients::new(self.c, self.d),
        )?)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MwWallState {
    pub t: f64,
    pub q: f64,
    pub qdot: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwIntegratorOptions {
    pub tol: f64,
    pub sample_dt: f64,
    pub q_guard: f64,
    pub max_steps: u64,
}

#[no_mangle]
pub extern "C" fn mw_integrator_options_default() -> MwIntegratorOptions {
    let o = IntegratorOptions::default();
    MwIntegratorOptions {
        tol: o.tol,
        sample_dt: o.sample_dt,
        q_guard: o.q_guard,
        max_steps: o.max_steps as u64,
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MwTrajectoryStats {
    pub q_min: f64,
    pub q_max: f64,
    pub midpoint: f64,
    pub time_mean_q: f64,
    pub energy_drift: f64,
    pub steps_accepted: u64,
    pub steps_rejected: u64,
}

/// Sampled wall trajectory.
pub struct MwTrajectory {
    samples: Vec<MwWallState>,
    stats: MwTrajectoryStats,
}

impl From<Trajectory> for MwTrajectory {
    fn from(t: Trajectory) -> Self {
        let s = t.stats;
        Self {
            samples: t
                .samples
                .iter()
                .map(|w| MwWallState {
                    t: w.t,
                    q: w.q,
                    qdot: w.qdot,
                })
                .collect(),
            stats: MwTrajectoryStats {
                q_min: s.q_min,
                q_max: s.q_max,
                midpoint: s.midpoint,
                time_mean_q: s.time_mean_q,
                energy_drift: s.energy_drift,
                steps_accepted: s.steps_accepted as u64,
                steps_rejected: s.steps_rejected as u64,
            },
        }
    }
}

/// Stable equilibrium of the wall.
///
/// # Safety
/// `osc` must be null or valid; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_equilibrium(osc: *const MwOscillator, out: *mut f64) -> MwStatus {
    guard(|| {
        let p = arg(osc)?.to_core()?;
        *self::out(out)? = dynamics::equilibrium(&p)?;
        Ok(())
    })
}

/// Turning points of the well containing the equilibrium at `energy`.
///
/// # Safety
/// `osc` must be null or valid; `lo` and `hi` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mw_turning_points(
    osc: *const MwOscillator,
    energy: f64,
    lo: *mut f64,
    hi: *mut f64,
) -> MwStatus {
    guard(|| {
        let p = arg(osc)?.to_core()?;
        let (a, b) = dynamics::turning_points(energy, &p)?;
        *out(lo)? = a;
        *out(hi)? = b;
        Ok(())
    })
}

/// Integrates the wall from `init` to `t_end`. `opts` may be null for the
/// defaults.
///
/// # Safety
/// `osc` must be null or valid, `opts` null or valid, `out` null or valid
/// for writes. Release the handle with [`mw_trajectory_free`].
#[no_mangle]
pub unsafe extern "C" fn mw_integrate(
    osc: *const MwOscillator,
    init: MwWallState,
    t_end: f64,
    opts: *const MwIntegratorOptions,
    out: *mut *mut MwTrajectory,
) -> MwStatus {
    guard(|| {
        let slot = self::out(out)?;
        *slot = ptr::null_mut();
        let p = arg(osc)?.to_core()?;
        let o = opts
            .as_ref()
            .copied()
            .unwrap_or_else(|| mw_integrator_options_default());
        let opts = IntegratorOptions {
            tol: o.tol,
            sample_dt: o.sample_dt,
            q_guard: o.q_guard,
            max_steps: usize::try_from(o.max_steps).unwrap_or(usize::MAX),
        };
        let traj =
            dynamics::integrate(WallState::new(init.t, init.q, init.qdot), &p, t_end, &opts)?;
        *slot = Box::into_raw(Box::new(MwTrajectory::from(traj)));
        Ok(())
    })
}

/// Borrows the samples; `*data` stays valid until the handle is freed.
///
/// # Safety
/// `traj` must be a live handle; `data` and `len` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mw_trajectory_samples(
    traj: *const MwTrajectory,
    data: *mut *const MwWallState,
    len: *mut usize,
) -> MwStatus {
    guard(|| {
        let t = arg(traj)?;
        *out(data)? = t.samples.as_ptr();
        *out(len)? = t.samples.len();
        Ok(())
    })
}

/// # Safety
/// `traj` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_trajectory_stats(
    traj: *const MwTrajectory,
    out: *mut MwTrajectoryStats,
) -> MwStatus {
    guard(|| {
        *self::out(out)? = arg(traj)?.stats;
        Ok(())
    })
}

/// # Safety
/// `traj` must be null or a handle from [`mw_integrate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_trajectory_free(traj: *mut MwTrajectory) {
    if !traj.is_null() {
        drop(Box::from_raw(traj));
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwBilliardParams {
    pub m_atom: f64,
    pub m_wall: f64,
    pub omega: f64,
    pub q0: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MwBilliardState {
    pub t: f64,
    /// Atom position and velocity.
    pub q: f64,
    pub v: f64,
    pub wall_q: f64,
    pub wall_v: f64,
}

impl From<&BilliardState> for MwBilliardState {
    fn from(s: &BilliardState) -> Self {
        Self {
            t: s.t,
            q: s.q,
            v: s.v,
            wall_q: s.wall_q,
            wall_v: s.wall_v,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MwBilliardStats {
    pub impacts: u64,
    pub reflections: u64,
    pub wall_q_min: f64,
    pub wall_q_max: f64,
    pub wall_midpoint: f64,
    pub wall_time_mean: f64,
    pub energy_drift: f64,
}

/// Sampled billiard run.
pub struct MwBilliardRun {
    samples: Vec<MwBilliardState>,
    stats: MwBilliardStats,
}

impl From<BilliardRun> for MwBilliardRun {
    fn from(r: BilliardRun) -> Self {
        let s = r.stats;
        Self {
            samples: r.samples.iter().map(MwBilliardState::from).collect(),
            stats: MwBilliardStats {
                impacts: s.impacts,
                reflections: s.reflections,
                wall_q_min: s.wall_q_min,
                wall_q_max: s.wall_q_max,
                wall_midpoint: s.wall_midpoint,
                wall_time_mean: s.wall_time_mean,
                energy_drift: s.energy_drift,
            },
        }
    }
}

/// Event-driven run of the classical billiard, sampled every `sample_dt`.
///
/// # Safety
/// `params` must be null or valid; `out` must be null or valid for writes.
/// Release the handle with [`mw_billiard_run_free`].
#[no_mangle]
pub unsafe extern "C" fn mw_billiard_simulate(
    params: *const MwBilliardParams,
    init: MwBilliardState,
    t_end: f64,
    sample_dt: f64,
    out: *mut *mut MwBilliardRun,
) -> MwStatus {
    guard(|| {
        let slot = self::out(out)?;
        *slot = ptr::null_mut();
        let p = arg(params)?;
        let p = BilliardParams::new(p.m_atom, p.m_wall, p.omega, p.q0)?;
        let init = BilliardState {
            t: init.t,
            q: init.q,
            v: init.v,
            wall_q: init.wall_q,
            wall_v: init.wall_v,
        };
        let opts = BilliardOptions {
            sample_dt,
            log_events: false,
            ..BilliardOptions::default()
        };
        let run = billiard::simulate(init, &p, t_end, &opts)?;
        *slot = Box::into_raw(Box::new(MwBilliardRun::from(run)));
        Ok(())
    })
}

/// Borrows the samples; `*data` stays valid until the handle is freed.
///
/// # Safety
/// `run` must be a live handle; `data` and `len` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mw_billiard_run_samples(
    run: *const MwBilliardRun,
    data: *mut *const MwBilliardState,
    len: *mut usize,
) -> MwStatus {
    guard(|| {
        let r = arg(run)?;
        *out(data)? = r.samples.as_ptr();
        *out(len)? = r.samples.len();
        Ok(())
    })
}

/// # Safety
/// `run` must be a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_billiard_run_stats(
    run: *const MwBilliardRun,
    out: *mut MwBilliardStats,
) -> MwStatus {
    guard(|| {
        *self::out(out)? = arg(run)?.stats;
        Ok(())
    })
}

/// # Safety
/// `run` must be null or a handle from [`mw_billiard_simulate`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn mw_billiard_run_free(run: *mut MwBilliardRun) {
    if !run.is_null() {
        drop(Box::from_raw(run));
    }
}

/// Headline numbers of a scenario run. Fields that do not apply to the
/// system kind are NaN (or 0 for counts).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MwRunSummary {
    pub c: f64,
    pub d: f64,
    pub q_min: f64,
    pub q_max: f64,
    pub midpoint: f64,
    pub time_mean: f64,
    pub equilibrium: f64,
    pub energy_drift: f64,
    pub samples: u64,
    pub impacts: u64,
    pub reflections: u64,
}

fn run_config(mut cfg: ScenarioConfig, out_dir: Option<String>) -> Result<MwRunSummary, Failure> {
    if let Some(dir) = out_dir {
        cfg.output.dir = PathBuf::from(dir);
    }
    let s = scenario::run_scenario(&cfg)?.summary;
    let coeffs = s.coefficients.map_or((f64::NAN, f64::NAN), |c| (c.c, c.d));
    let (impacts, reflections) = s.events.unwrap_or((0, 0));
    Ok(MwRunSummary {
        c: coeffs.0,
        d: coeffs.1,
        q_min: s.q_min,
        q_max: s.q_max,
        midpoint: s.midpoint,
        time_mean: s.time_mean,
        equilibrium: s.equilibrium.unwrap_or(f64::NAN),
        energy_drift: s.energy_drift,
        samples: s.samples as u64,
        impacts,
        reflections,
    })
}

unsafe fn optional_dir(out_dir: *const c_char) -> Result<Option<String>, Failure> {
    if out_dir.is_null() {
        Ok(None)
    } else {
        c_str(out_dir).map(Some)
    }
}

/// Runs a scenario given as INI text, writing its CSV and summary files.
/// `out_dir` overrides the configured output directory unless null.
///
/// # Safety
/// `ini` must be a NUL-terminated string, `out_dir` null or NUL-terminated,
/// `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_run_config(
    ini: *const c_char,
    out_dir: *const c_char,
    out: *mut MwRunSummary,
) -> MwStatus {
    guard(|| {
        let text = c_str(ini)?;
        let cfg = ScenarioConfig::from_ini_str(&text).map_err(|e| Failure(MwStatus::Config, e))?;
        let summary = run_config(cfg, optional_dir(out_dir)?)?;
        *self::out(out)? = summary;
        Ok(())
    })
}

/// Runs a built-in preset. `out_dir` overrides the default `.` unless
/// null.
///
/// # Safety
/// `name` must be a NUL-terminated string, `out_dir` null or NUL-terminated,
/// `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mw_run_preset(
    name: *const c_char,
    out_dir: *const c_char,
    out: *mut MwRunSummary,
) -> MwStatus {
    guard(|| {
        let name = c_str(name)?;
        let preset = scenario::preset(&name)
            .ok_or_else(|| Failure(MwStatus::Config, format!("unknown preset `{name}`")))?;
        let summary = run_config(preset.config, optional_dir(out_dir)?)?;
        *self::out(out)? = summary;
        Ok(())
    })
}
