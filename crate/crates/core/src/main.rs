use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use matterwave::atom_box::physical_estimate;
use matterwave::scenario::{self, ScenarioConfig, ScenarioError};

#[derive(Parser)]
#[command(
    version,
    about = "Oscillating wall driven by a confined atom or condensate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a preset, a config file, or every preset.
    Run(RunArgs),
    /// List the built-in presets.
    ListPresets,
    /// Print a preset as an INI config.
    PresetConfig { name: String },
    /// Convert SI inputs to code units and estimate the drive coefficient.
    Estimate {
        /// Occupied level.
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Atom mass in kg.
        #[arg(long)]
        m_atom: f64,
        /// Wall mass in kg.
        #[arg(long)]
        m_wall: f64,
        /// Angular frequency in rad/s.
        #[arg(long)]
        omega: f64,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, conflicts_with_all = ["config", "all"])]
    preset: Option<String>,
    #[arg(long, conflicts_with = "all")]
    config: Option<PathBuf>,
    /// Run every preset, concurrently.
    #[arg(long)]
    all: bool,
    /// Output directory (overrides the config).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    sample_dt: Option<f64>,
}

impl RunArgs {
    fn apply(&self, cfg: &mut ScenarioConfig) -> Result<(), ScenarioError> {
        let check = |what: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(ScenarioError::Config(format!(
                    "--{what} must be positive, got {v}"
                )))
            }
        };
        if let Some(dir) = &self.out {
            cfg.output.dir = dir.clone();
        }
        if let Some(tol) = self.tol {
            cfg.integrator.tol = check("tol", tol)?;
        }
        if let Some(t) = self.t_end {
            cfg.integrator.t_end = check("t-end", t)?;
        }
        if let Some(dt) = self.sample_dt {
            cfg.integrator.sample_dt = check("sample-dt", dt)?;
        }
        Ok(())
    }

    fn configs(&self) -> Result<Vec<ScenarioConfig>, ScenarioError> {
        let mut cfgs = if self.all {
            scenario::presets().into_iter().map(|p| p.config).collect()
        } else if let Some(name) = &self.preset {
            let p = scenario::preset(name)
                .ok_or_else(|| ScenarioError::Config(format!("unknown preset `{name}`")))?;
            vec![p.config]
        } else if let Some(path) = &self.config {
            let text = fs::read_to_string(path).map_err(|e| {
                ScenarioError::Config(format!("cannot read {}: {e}", path.display()))
            })?;
            vec![ScenarioConfig::from_ini_str(&text)
                .map_err(|e| ScenarioError::Config(format!("{}: {e}", path.display())))?]
        } else {
            return Err(ScenarioError::Config(
                "one of --preset, --config or --all is required".into(),
            ));
        };
        for cfg in &mut cfgs {
            self.apply(cfg)?;
        }
        Ok(cfgs)
    }
}

fn run(args: &RunArgs) -> ExitCode {
    let cfgs = match args.configs() {
        Ok(cfgs) => cfgs,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let mut worst = 0u8;
    for result in scenario::run_batch(&cfgs) {
        match result {
            Ok(out) => {
                print!("{}", out.summary);
                println!("csv = {}", out.csv_path.display());
                println!();
            }
            Err(e) => {
                eprintln!("error: {e}");
                worst = worst.max(e.exit_code());
            }
        }
    }
    ExitCode::from(worst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => run(&args),
        Command::ListPresets => {
            for p in scenario::presets() {
                println!("{:<14} {}", p.name, p.description);
            }
            ExitCode::SUCCESS
        }
        Command::PresetConfig { name } => match scenario::preset(&name) {
            Some(p) => {
                print!("{}", p.config.to_ini_string());
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("error: unknown preset `{name}`");
                ExitCode::from(2)
            }
        },
        Command::Estimate {
            n,
            m_atom,
            m_wall,
            omega,
        } => match physical_estimate(n, m_atom, m_wall, omega) {
            Ok(est) => {
                println!("B_si = {:e}", est.b_si);
                println!("B_code = {}", est.b_code);
                println!("m_atom_code = {}", est.m_atom_code);
                println!("m_wall_code = {}", est.m_wall_code);
                println!("omega_code = {}", est.omega_code);
                println!("period_si = {:e}", est.period_si);
                println!("period_code = {}", est.period_code);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
