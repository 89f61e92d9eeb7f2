use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::config::{AtomDrive, BecDrive, ScenarioConfig, SystemKind, SystemSpec};
use crate::atom_box::coefficient_b;
use crate::billiard::{self, BilliardOptions, BilliardParams, BilliardState};
use crate::dynamics::{self, IntegratorOptions, OscillatorParams, WallState};
use crate::{gp_modes, Error, ForceCoefficients};

/// Environment variable bounding the worker count of [`run_batch`].
pub const THREADS_ENV: &str = "MATTERWAVE_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Numerical(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl ScenarioError {
    /// 2 for configuration problems, 3 for numerical failures, 1 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            ScenarioError::Config(_) => 2,
            ScenarioError::Numerical(_) => 3,
            ScenarioError::Io { .. } => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub name: String,
    pub kind: SystemKind,
    /// Drive coefficients; absent for the billiard.
    pub coefficients: Option<ForceCoefficients>,
    pub q_min: f64,
    pub q_max: f64,
    pub midpoint: f64,
    pub time_mean: f64,
    /// Stable root of the force balance, if one exists.
    pub equilibrium: Option<f64>,
    pub energy_drift: f64,
    pub samples: usize,
    /// Accepted and rejected integrator steps.
    pub steps: Option<(usize, usize)>,
    /// Wall impacts and fixed-wall reflections.
    pub events: Option<(u64, u64)>,
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name = {}", self.name)?;
        writeln!(f, "kind = {}", self.kind)?;
        if let Some(c) = self.coefficients {
            writeln!(f, "C = {}", c.c)?;
            writeln!(f, "D = {}", c.d)?;
        }
        writeln!(f, "Q_min = {}", self.q_min)?;
        writeln!(f, "Q_max = {}", self.q_max)?;
        writeln!(f, "midpoint = {}", self.midpoint)?;
        writeln!(f, "time_mean = {}", self.time_mean)?;
        match self.equilibrium {
            Some(q) => writeln!(f, "equilibrium = {q}")?,
            None => writeln!(f, "equilibrium = none")?,
        }
        writeln!(f, "energy_drift = {:e}", self.energy_drift)?;
        writeln!(f, "samples = {}", self.samples)?;
        if let Some((acc, rej)) = self.steps {
            writeln!(f, "steps_accepted = {acc}")?;
            writeln!(f, "steps_rejected = {rej}")?;
        }
        if let Some((impacts, reflections)) = self.events {
            writeln!(f, "impacts = {impacts}")?;
            writeln!(f, "reflections = {reflections}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub summary: RunSummary,
    pub csv_path: PathBuf,
    pub summary_path: PathBuf,
}

fn drive_coefficients(cfg: &ScenarioConfig) -> Result<ForceCoefficients, Error> {
    Ok(match &cfg.system {
        SystemSpec::QuantumAtom(AtomDrive::Direct { b }) => ForceCoefficients::atom(*b),
        SystemSpec::QuantumAtom(AtomDrive::Populations {
            populations,
            params,
        }) => coefficient_b(populations, params),
        SystemSpec::Bec(BecDrive::Direct { c, d }) => ForceCoefficients::new(*c, *d),
        SystemSpec::Bec(BecDrive::Mode {
            g,
            j,
            q_ref,
            params,
        }) => gp_modes::force_coefficients(*g, q_ref.unwrap_or(cfg.oscillator.q0), *j, params)?,
        SystemSpec::ClassicalBilliard { .. } => unreachable!("billiard has no drive coefficients"),
    })
}

fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> ScenarioError + '_ {
    move |e| ScenarioError::Io {
        path: path.to_path_buf(),
        source: e.into(),
    }
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> ScenarioError + '_ {
    move |source| ScenarioError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_wall_csv(path: &Path, samples: &[WallState]) -> Result<(), ScenarioError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["t", "Q", "Qdot"]).map_err(csv_err(path))?;
    for s in samples {
        w.write_record([fmt_f(s.t), fmt_f(s.q), fmt_f(s.qdot)])
            .map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn write_billiard_csv(path: &Path, samples: &[BilliardState]) -> Result<(), ScenarioError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["t", "Q", "Qdot", "q", "v"])
        .map_err(csv_err(path))?;
    for s in samples {
        w.write_record([
            fmt_f(s.t),
            fmt_f(s.wall_q),
            fmt_f(s.wall_v),
            fmt_f(s.q),
            fmt_f(s.v),
        ])
        .map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

/// Runs one scenario and writes `<dir>/<name>.csv` and
/// `<dir>/<name>.summary.txt`.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<RunOutcome, ScenarioError> {
    let dir = &cfg.output.dir;
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let csv_path = dir.join(format!("{}.csv", cfg.output.name));
    let summary_path = dir.join(format!("{}.summary.txt", cfg.output.name));
    let integ = &cfg.integrator;
    let t_end = integ.t_end;

    let summary = match &cfg.system {
        SystemSpec::ClassicalBilliard { m_atom, m_wall } => {
            let p = BilliardParams::new(*m_atom, *m_wall, cfg.oscillator.omega, cfg.oscillator.q0)
                .map_err(|e| ScenarioError::Config(e.to_string()))?;
            let (q, v) = cfg
                .initial
                .atom
                .ok_or_else(|| ScenarioError::Config("billiard needs an atom state".into()))?;
            let init = BilliardState {
                t: 0.0,
                q,
                v,
                wall_q: cfg.initial.wall_q,
                wall_v: cfg.initial.wall_qdot,
            };
            let opts = BilliardOptions {
                sample_dt: integ.sample_dt,
                log_events: false,
                ..BilliardOptions::default()
            };
            let run = billiard::simulate(init, &p, t_end, &opts)?;
            write_billiard_csv(&csv_path, &run.samples)?;
            let s = run.stats;
            RunSummary {
                name: cfg.output.name.clone(),
                kind: SystemKind::ClassicalBilliard,
                coefficients: None,
                q_min: s.wall_q_min,
                q_max: s.wall_q_max,
                midpoint: s.wall_midpoint,
                time_mean: s.wall_time_mean,
                equilibrium: None,
                energy_drift: s.energy_drift,
                samples: run.samples.len(),
                steps: None,
                events: Some((s.impacts, s.reflections)),
            }
        }
        _ => {
            let coeffs = drive_coefficients(cfg)?;
            let p = OscillatorParams::new(cfg.oscillator.omega, cfg.oscillator.q0, coeffs)
                .map_err(|e| ScenarioError::Config(e.to_string()))?;
            let opts = IntegratorOptions {
                tol: integ.tol,
                sample_dt: integ.sample_dt,
                q_guard: integ.q_guard,
                ..IntegratorOptions::default()
            };
            let init = WallState::new(0.0, cfg.initial.wall_q, cfg.initial.wall_qdot);
            let traj = dynamics::integrate(init, &p, t_end, &opts)?;
            write_wall_csv(&csv_path, &traj.samples)?;
            // Without a spring or with an overwhelming attraction there is
            // no stable balance point; that is reported, not an error.
            let equilibrium = dynamics::equilibrium(&p).ok();
            let s = traj.stats;
            RunSummary {
                name: cfg.output.name.clone(),
                kind: cfg.system.kind(),
                coefficients: Some(coeffs),
                q_min: s.q_min,
                q_max: s.q_max,
                midpoint: s.midpoint,
                time_mean: s.time_mean_q,
                equilibrium,
                energy_drift: s.energy_drift,
                samples: traj.samples.len(),
                steps: Some((s.steps_accepted, s.steps_rejected)),
                events: None,
            }
        }
    };
    fs::write(&summary_path, summary.to_string()).map_err(io_err(&summary_path))?;
    Ok(RunOutcome {
        summary,
        csv_path,
        summary_path,
    })
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
}

/// Runs several scenarios concurrently. Results come back in input order.
/// Callers must give every config its own output name.
pub fn run_batch(cfgs: &[ScenarioConfig]) -> Vec<Result<RunOutcome, ScenarioError>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_limit() {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| cfgs.par_iter().map(run_scenario).collect()),
        Err(_) => cfgs.iter().map(run_scenario).collect(),
    }
}
