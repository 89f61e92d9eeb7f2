//! INI scenario files.
//!
//! ```ini
//! [system]
//! kind = quantum_atom        ; quantum_atom | bec | classical_billiard
//! B = 0.01                   ; or populations = 1:0.5, 2:0.5 with m_atom, m_wall, hbar
//!
//! [oscillator]
//! omega = 1
//! q0 = 1
//!
//! [initial]
//! wall_q = 1.1
//! wall_qdot = 0
//!
//! [integrator]
//! tol = 1e-10
//! t_end = 50
//! sample_dt = 0.01
//!
//! [output]
//! dir = out
//! name = fig1
//! format = csv
//! ```
//!
//! `bec` takes either `C` and `D` or `g`, `j` (and optionally `q_ref`, the
//! masses and `hbar`); `classical_billiard` takes `m_atom`, `m_wall` and the
//! atom's `atom_q`, `atom_v` under `[initial]`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use ini::Ini;

use crate::atom_box::{BoxParams, QuantumPopulations};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    QuantumAtom,
    Bec,
    ClassicalBilliard,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::QuantumAtom => "quantum_atom",
            SystemKind::Bec => "bec",
            SystemKind::ClassicalBilliard => "classical_billiard",
        })
    }
}

impl FromStr for SystemKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quantum_atom" => Ok(SystemKind::QuantumAtom),
            "bec" => Ok(SystemKind::Bec),
            "classical_billiard" => Ok(SystemKind::ClassicalBilliard),
            other => Err(format!("unknown system kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AtomDrive {
    /// `B` given directly.
    Direct { b: f64 },
    Populations {
        populations: QuantumPopulations,
        params: BoxParams,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum BecDrive {
    Direct {
        c: f64,
        d: f64,
    },
    Mode {
        g: f64,
        j: u32,
        /// Box length at which the mode is solved; the oscillator's `q0` if
        /// unset.
        q_ref: Option<f64>,
        params: BoxParams,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SystemSpec {
    QuantumAtom(AtomDrive),
    Bec(BecDrive),
    ClassicalBilliard { m_atom: f64, m_wall: f64 },
}

impl SystemSpec {
    pub fn kind(&self) -> SystemKind {
        match self {
            SystemSpec::QuantumAtom(_) => SystemKind::QuantumAtom,
            SystemSpec::Bec(_) => SystemKind::Bec,
            SystemSpec::ClassicalBilliard { .. } => SystemKind::ClassicalBilliard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSpec {
    pub omega: f64,
    pub q0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialSpec {
    pub wall_q: f64,
    pub wall_qdot: f64,
    /// Atom position and velocity, billiard only.
    pub atom: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorSpec {
    pub tol: f64,
    pub t_end: f64,
    pub sample_dt: f64,
    pub q_guard: f64,
}

impl Default for IntegratorSpec {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            t_end: 50.0,
            sample_dt: 0.01,
            q_guard: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub dir: PathBuf,
    /// File stem of the CSV and summary.
    pub name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub system: SystemSpec,
    pub oscillator: OscillatorSpec,
    pub initial: InitialSpec,
    pub integrator: IntegratorSpec,
    pub output: OutputSpec,
}

const SECTIONS: [&str; 5] = ["system", "oscillator", "initial", "integrator", "output"];

/// Key/value view of one section that tracks which keys were consumed.
struct Section {
    name: &'static str,
    values: BTreeMap<String, String>,
}

impl Section {
    fn take(&mut self, key: &str) -> Option<String> {
        self.values.remove(key)
    }

    fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    fn number(&mut self, key: &str) -> Result<Option<f64>, String> {
        self.take(key)
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("[{}] {key}: `{v}` is not a number", self.name))
            })
            .transpose()
    }

    fn required(&mut self, key: &str) -> Result<f64, String> {
        self.number(key)?
            .ok_or_else(|| format!("[{}] missing `{key}`", self.name))
    }

    fn finish(self) -> Result<(), String> {
        match self.values.keys().next() {
            Some(key) => Err(format!("[{}] unexpected key `{key}`", self.name)),
            None => Ok(()),
        }
    }
}

fn box_params(sec: &mut Section) -> Result<BoxParams, String> {
    let m_atom = sec.number("m_atom")?.unwrap_or(1.0);
    let m_wall = sec.number("m_wall")?.unwrap_or(1.0);
    let hbar = sec.number("hbar")?.unwrap_or(1.0);
    BoxParams::new(m_atom, m_wall, hbar).map_err(|e| format!("[system] {e}"))
}

fn parse_populations(text: &str) -> Result<QuantumPopulations, String> {
    let levels = text
        .split(',')
        .map(|item| {
            let (n, p) = item
                .split_once(':')
                .ok_or_else(|| format!("population entry `{}` is not `n:p`", item.trim()))?;
            let n = n
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("bad level index `{}`", n.trim()))?;
            let p = p
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("bad probability `{}`", p.trim()))?;
            Ok((n, p))
        })
        .collect::<Result<Vec<_>, String>>()?;
    QuantumPopulations::new(levels).map_err(|e| e.to_string())
}

fn positive(what: &str, v: f64) -> Result<f64, String> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what} must be positive and finite, got {v}"))
    }
}

fn finite(what: &str, v: f64) -> Result<f64, String> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what} must be finite, got {v}"))
    }
}

impl ScenarioConfig {
    pub fn from_ini_str(text: &str) -> Result<Self, String> {
        let ini = Ini::load_from_str(text).map_err(|e| format!("malformed INI: {e}"))?;
        let mut sections: BTreeMap<&'static str, Section> = SECTIONS
            .iter()
            .map(|&name| {
                (
                    name,
                    Section {
                        name,
                        values: BTreeMap::new(),
                    },
                )
            })
            .collect();
        for (name, props) in ini.iter() {
            let Some(name) = name else {
                if props.iter().next().is_some() {
                    return Err("keys outside of a section".into());
                }
                continue;
            };
            let sec = sections
                .get_mut(name)
                .ok_or_else(|| format!("unknown section [{name}]"))?;
            for (k, v) in props.iter() {
                if sec.values.insert(k.to_string(), v.to_string()).is_some() {
                    return Err(format!("[{name}] duplicate key `{k}`"));
                }
            }
        }
        let mut take = |name: &str| sections.remove(name).expect("known section");
        let (mut sys, mut osc, mut init, mut integ, mut out) = (
            take("system"),
            take("oscillator"),
            take("initial"),
            take("integrator"),
            take("output"),
        );

        let kind: SystemKind = sys
            .take("kind")
            .ok_or("[system] missing `kind`")?
            .trim()
            .parse()?;
        let system = match kind {
            SystemKind::QuantumAtom => {
                if sys.has("B") {
                    if sys.has("populations") {
                        return Err("[system] give either `B` or `populations`, not both".into());
                    }
                    let b = finite("B", sys.required("B")?)?;
                    SystemSpec::QuantumAtom(AtomDrive::Direct { b })
                } else {
                    let text = sys
                        .take("populations")
                        .ok_or("[system] quantum_atom needs `B` or `populations`")?;
                    let populations = parse_populations(&text)?;
                    let params = box_params(&mut sys)?;
                    SystemSpec::QuantumAtom(AtomDrive::Populations {
                        populations,
                        params,
                    })
                }
            }
            SystemKind::Bec => {
                if sys.has("C") || sys.has("D") {
                    if sys.has("g") {
                        return Err("[system] give either `C`/`D` or `g`, not both".into());
                    }
                    let c = finite("C", sys.required("C")?)?;
                    let d = finite("D", sys.number("D")?.unwrap_or(0.0))?;
                    SystemSpec::Bec(BecDrive::Direct { c, d })
                } else {
                    let g = sys.required("g")?;
                    if g == 0.0 || !g.is_finite() {
                        return Err(format!("[system] g must be non-zero and finite, got {g}"));
                    }
                    let j = sys.take("j").ok_or("[system] missing `j`")?;
                    let j = j
                        .trim()
                        .parse::<u32>()
                        .ok()
                        .filter(|&j| j >= 1)
                        .ok_or_else(|| {
                            format!("[system] j must be a positive integer, got `{j}`")
                        })?;
                    let q_ref = sys
                        .number("q_ref")?
                        .map(|q| positive("q_ref", q))
                        .transpose()?;
                    let params = box_params(&mut sys)?;
                    SystemSpec::Bec(BecDrive::Mode {
                        g,
                        j,
                        q_ref,
                        params,
                    })
                }
            }
            SystemKind::ClassicalBilliard => {
                let m_atom = positive("m_atom", sys.required("m_atom")?)?;
                let m_wall = positive("m_wall", sys.required("m_wall")?)?;
                SystemSpec::ClassicalBilliard { m_atom, m_wall }
            }
        };
        sys.finish()?;

        let oscillator = OscillatorSpec {
            omega: osc.required("omega")?,
            q0: positive("q0", osc.required("q0")?)?,
        };
        if !(oscillator.omega >= 0.0) || !oscillator.omega.is_finite() {
            return Err(format!(
                "omega must be non-negative, got {}",
                oscillator.omega
            ));
        }
        if kind == SystemKind::ClassicalBilliard && oscillator.omega == 0.0 {
            return Err("classical_billiard needs omega > 0".into());
        }
        osc.finish()?;

        let wall_q = positive("wall_q", init.required("wall_q")?)?;
        let wall_qdot = finite("wall_qdot", init.number("wall_qdot")?.unwrap_or(0.0))?;
        let atom = if kind == SystemKind::ClassicalBilliard {
            let q = init.required("atom_q")?;
            let v = finite("atom_v", init.required("atom_v")?)?;
            if !(0.0..=wall_q).contains(&q) {
                return Err(format!("atom_q must lie in [0, wall_q], got {q}"));
            }
            Some((q, v))
        } else {
            None
        };
        init.finish()?;
        let initial = InitialSpec {
            wall_q,
            wall_qdot,
            atom,
        };

        let defaults = IntegratorSpec::default();
        let integrator = IntegratorSpec {
            tol: positive("tol", integ.number("tol")?.unwrap_or(defaults.tol))?,
            t_end: positive("t_end", integ.number("t_end")?.unwrap_or(defaults.t_end))?,
            sample_dt: positive(
                "sample_dt",
                integ.number("sample_dt")?.unwrap_or(defaults.sample_dt),
            )?,
            q_guard: positive(
                "q_guard",
                integ.number("q_guard")?.unwrap_or(defaults.q_guard),
            )?,
        };
        integ.finish()?;

        let dir = PathBuf::from(out.take("dir").unwrap_or_else(|| ".".into()).trim());
        let name = out
            .take("name")
            .unwrap_or_else(|| "scenario".into())
            .trim()
            .to_string();
        if name.is_empty() || name.contains(['/', '\\']) {
            return Err(format!("[output] invalid name `{name}`"));
        }
        if let Some(format) = out.take("format") {
            if format.trim() != "csv" {
                return Err(format!("[output] unsupported format `{}`", format.trim()));
            }
        }
        out.finish()?;

        Ok(ScenarioConfig {
            system,
            oscillator,
            initial,
            integrator,
            output: OutputSpec { dir, name },
        })
    }

    /// Serializes to the INI layout read by [`ScenarioConfig::from_ini_str`].
    /// Numbers use the shortest representation that parses back exactly.
    pub fn to_ini_string(&self) -> String {
        let mut ini = Ini::new();
        {
            let mut sys = ini.with_section(Some("system"));
            sys.set("kind", self.system.kind().to_string());
        }
        let mut set = |section: &str, key: &str, value: String| {
            ini.with_section(Some(section)).set(key, value);
        };
        let set_params = |set: &mut dyn FnMut(&str, &str, String), p: &BoxParams| {
            set("system", "m_atom", p.m_atom.to_string());
            set("system", "m_wall", p.m_wall.to_string());
            set("system", "hbar", p.hbar.to_string());
        };
        match &self.system {
            SystemSpec::QuantumAtom(AtomDrive::Direct { b }) => set("system", "B", b.to_string()),
            SystemSpec::QuantumAtom(AtomDrive::Populations {
                populations,
                params,
            }) => {
                let text = populations
                    .iter()
                    .map(|(n, p)| format!("{n}:{p}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                set("system", "populations", text);
                set_params(&mut set, params);
            }
            SystemSpec::Bec(BecDrive::Direct { c, d }) => {
                set("system", "C", c.to_string());
                set("system", "D", d.to_string());
            }
            SystemSpec::Bec(BecDrive::Mode {
                g,
                j,
                q_ref,
                params,
            }) => {
                set("system", "g", g.to_string());
                set("system", "j", j.to_string());
                if let Some(q) = q_ref {
                    set("system", "q_ref", q.to_string());
                }
                set_params(&mut set, params);
            }
            SystemSpec::ClassicalBilliard { m_atom, m_wall } => {
                set("system", "m_atom", m_atom.to_string());
                set("system", "m_wall", m_wall.to_string());
            }
        }
        set("oscillator", "omega", self.oscillator.omega.to_string());
        set("oscillator", "q0", self.oscillator.q0.to_string());
        set("initial", "wall_q", self.initial.wall_q.to_string());
        set("initial", "wall_qdot", self.initial.wall_qdot.to_string());
        if let Some((q, v)) = self.initial.atom {
            set("initial", "atom_q", q.to_string());
            set("initial", "atom_v", v.to_string());
        }
        let integ = &self.integrator;
        set("integrator", "tol", integ.tol.to_string());
        set("integrator", "t_end", integ.t_end.to_string());
        set("integrator", "sample_dt", integ.sample_dt.to_string());
        set("integrator", "q_guard", integ.q_guard.to_string());
        set("output", "dir", self.output.dir.display().to_string());
        set("output", "name", self.output.name.clone());
        set("output", "format", "csv".into());

        let mut buf = Vec::new();
        ini.write_to(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("INI output is UTF-8")
    }
}
