//! Built-in scenarios, named `fig1` to `fig5-*`.

use std::path::PathBuf;

use super::config::{
    AtomDrive, BecDrive, InitialSpec, IntegratorSpec, OscillatorSpec, OutputSpec, ScenarioConfig,
    SystemSpec,
};

/// Run length of every preset: several periods at `ω = 1`.
pub const PRESET_T_END: f64 = 50.0;

// Classical comparison: M ω² = 60 and M/m = 1000 with the wall mass as unit.
const BILLIARD_WALL_MASS: f64 = 1.0;
const BILLIARD_ATOM_MASS: f64 = 1e-3;
const BILLIARD_SPRING: f64 = 60.0;
const BILLIARD_ATOM_SPEED: f64 = 25.0;

const FIG5_C: f64 = 0.01;

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub config: ScenarioConfig,
}

fn wall_config(
    name: &str,
    system: SystemSpec,
    omega: f64,
    q0: f64,
    q_start: f64,
    atom: Option<(f64, f64)>,
) -> ScenarioConfig {
    ScenarioConfig {
        system,
        oscillator: OscillatorSpec { omega, q0 },
        initial: InitialSpec {
            wall_q: q_start,
            wall_qdot: 0.0,
            atom,
        },
        integrator: IntegratorSpec {
            t_end: PRESET_T_END,
            ..IntegratorSpec::default()
        },
        output: OutputSpec {
            dir: PathBuf::from("."),
            name: name.to_string(),
        },
    }
}

fn atom(
    name: &'static str,
    description: &'static str,
    b: f64,
    omega: f64,
    q0: f64,
    q_start: f64,
) -> Preset {
    Preset {
        name,
        description,
        config: wall_config(
            name,
            SystemSpec::QuantumAtom(AtomDrive::Direct { b }),
            omega,
            q0,
            q_start,
            None,
        ),
    }
}

fn billiard(name: &'static str, description: &'static str, q0: f64) -> Preset {
    let system = SystemSpec::ClassicalBilliard {
        m_atom: BILLIARD_ATOM_MASS,
        m_wall: BILLIARD_WALL_MASS,
    };
    let omega = (BILLIARD_SPRING / BILLIARD_WALL_MASS).sqrt();
    Preset {
        name,
        description,
        config: wall_config(
            name,
            system,
            omega,
            q0,
            q0 + 0.1,
            Some((0.0, BILLIARD_ATOM_SPEED)),
        ),
    }
}

fn bec(name: &'static str, description: &'static str, d: f64) -> Preset {
    Preset {
        name,
        description,
        config: wall_config(
            name,
            SystemSpec::Bec(BecDrive::Direct { c: FIG5_C, d }),
            1.0,
            3.0,
            3.1,
            None,
        ),
    }
}

/// All presets in display order.
pub fn presets() -> Vec<Preset> {
    vec![
        atom(
            "fig1",
            "atom, B=0.01, w=1, Q0=1, Q(0)=1.1",
            0.01,
            1.0,
            1.0,
            1.1,
        ),
        atom(
            "fig2a",
            "atom, B=0.1, w=1, Q0=1, Q(0)=1.1",
            0.1,
            1.0,
            1.0,
            1.1,
        ),
        atom(
            "fig2b",
            "atom, B=0.1, w=1, Q0=1, Q(0)=1.8",
            0.1,
            1.0,
            1.0,
            1.8,
        ),
        atom("fig3a", "atom, B=w=0.1, Q0=3, Q(0)=3.1", 0.1, 0.1, 3.0, 3.1),
        atom("fig3b", "atom, B=w=0.1, Q0=1, Q(0)=1.1", 0.1, 0.1, 1.0, 1.1),
        billiard(
            "fig4a",
            "classical billiard, Mw^2=60, M/m=1000, v=25, Q0=3, Q(0)=3.1",
            3.0,
        ),
        billiard(
            "fig4b",
            "classical billiard, Mw^2=60, M/m=1000, v=25, Q0=1, Q(0)=1.1",
            1.0,
        ),
        bec(
            "fig5-D=+2",
            "condensate, C=0.01, D=+2, w=1, Q0=3, Q(0)=3.1",
            2.0,
        ),
        bec(
            "fig5-D=+0.5",
            "condensate, C=0.01, D=+0.5, w=1, Q0=3, Q(0)=3.1",
            0.5,
        ),
        bec(
            "fig5-D=0",
            "condensate, C=0.01, D=0, w=1, Q0=3, Q(0)=3.1",
            0.0,
        ),
        bec(
            "fig5-D=-0.5",
            "condensate, C=0.01, D=-0.5, w=1, Q0=3, Q(0)=3.1",
            -0.5,
        ),
        bec(
            "fig5-D=-2",
            "condensate, C=0.01, D=-2, w=1, Q0=3, Q(0)=3.1",
            -2.0,
        ),
    ]
}

/// Looks up a preset by name. `fig5-repulsive` and `fig5-attractive` are
/// accepted for the `D = ±2` runs.
pub fn preset(name: &str) -> Option<Preset> {
    let name = match name {
        "fig5-repulsive" => "fig5-D=+2",
        "fig5-attractive" => "fig5-D=-2",
        other => other,
    };
    presets().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_presets_with_unique_names() {
        let all = presets();
        assert_eq!(all.len(), 12);
        let mut names: Vec<_> = all.iter().map(|p| p.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 12);
        for p in &all {
            assert_eq!(p.config.output.name, p.name);
        }
    }

    #[test]
    fn figure_parameters() {
        let f2b = preset("fig2b").unwrap().config;
        assert_eq!(f2b.initial.wall_q, 1.8);
        assert_eq!(
            f2b.system,
            SystemSpec::QuantumAtom(AtomDrive::Direct { b: 0.1 })
        );

        let f3a = preset("fig3a").unwrap().config;
        assert_eq!(
            f3a.oscillator,
            OscillatorSpec {
                omega: 0.1,
                q0: 3.0
            }
        );
        assert_eq!(
            f3a.system,
            SystemSpec::QuantumAtom(AtomDrive::Direct { b: 0.1 })
        );

        let f4b = preset("fig4b").unwrap().config;
        let SystemSpec::ClassicalBilliard { m_atom, m_wall } = f4b.system else {
            panic!("fig4b is not a billiard");
        };
        assert!((m_wall * f4b.oscillator.omega.powi(2) - 60.0).abs() < 1e-12);
        assert_eq!(m_wall / m_atom, 1000.0);
        assert_eq!(f4b.initial.atom, Some((0.0, 25.0)));
    }

    #[test]
    fn aliases_and_round_trip() {
        assert_eq!(preset("fig5-repulsive").unwrap().name, "fig5-D=+2");
        assert_eq!(preset("fig5-attractive").unwrap().name, "fig5-D=-2");
        assert!(preset("fig6").is_none());
        for p in presets() {
            let again = ScenarioConfig::from_ini_str(&p.config.to_ini_string()).unwrap();
            assert_eq!(again, p.config, "{}", p.name);
        }
    }
}
