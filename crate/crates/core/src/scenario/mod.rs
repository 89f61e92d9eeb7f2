//! Scenario configuration, built-in presets and the runner behind the CLI.

mod config;
mod presets;
mod run;

pub use config::{
    AtomDrive, BecDrive, InitialSpec, IntegratorSpec, OscillatorSpec, OutputSpec, ScenarioConfig,
    SystemKind, SystemSpec,
};
pub use presets::{preset, presets, Preset, PRESET_T_END};
pub use run::{run_batch, run_scenario, RunOutcome, RunSummary, ScenarioError, THREADS_ENV};
