use matterwave::dynamics::{
    equilibrium, integrate, turning_points, IntegratorOptions, OscillatorParams, WallState,
};
use matterwave::scenario::{presets, AtomDrive, BecDrive, SystemSpec};
use matterwave::ForceCoefficients;

fn wall_presets() -> Vec<(&'static str, OscillatorParams, WallState)> {
    presets()
        .into_iter()
        .filter_map(|p| {
            let coeffs = match p.config.system {
                SystemSpec::QuantumAtom(AtomDrive::Direct { b }) => ForceCoefficients::atom(b),
                SystemSpec::Bec(BecDrive::Direct { c, d }) => ForceCoefficients::new(c, d),
                _ => return None,
            };
            let osc = p.config.oscillator;
            let params = OscillatorParams::new(osc.omega, osc.q0, coeffs).unwrap();
            let init = WallState::new(0.0, p.config.initial.wall_q, p.config.initial.wall_qdot);
            Some((p.name, params, init))
        })
        .collect()
}

#[test]
fn energy_drift_stays_below_hundred_tol() {
    for tol in [1e-6, 1e-8, 1e-10] {
        for (name, params, init) in wall_presets() {
            let opts = IntegratorOptions {
                tol,
                ..IntegratorOptions::default()
            };
            let traj = integrate(init, &params, 100.0, &opts).unwrap();
            assert!(
                traj.stats.energy_drift < 100.0 * tol,
                "{name} tol={tol}: drift {:e}",
                traj.stats.energy_drift
            );
        }
    }
}

#[test]
fn trajectory_stays_between_turning_points() {
    for (name, params, init) in wall_presets() {
        let e = params.energy(&init).unwrap();
        let (lo, hi) = turning_points(e, &params).unwrap();
        let traj = integrate(init, &params, 50.0, &IntegratorOptions::default()).unwrap();
        assert!(
            traj.stats.q_min >= lo - 1e-8 && traj.stats.q_max <= hi + 1e-8,
            "{name}"
        );
        for w in traj.samples.windows(2) {
            assert!(w[1].t > w[0].t);
        }
        // the equilibrium lies inside the oscillation range
        let q_star = equilibrium(&params).unwrap();
        assert!(lo < q_star && q_star < hi, "{name}");
    }
}

#[test]
fn equilibrium_increases_with_d() {
    let ds = [-2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 2.0];
    let roots: Vec<f64> = ds
        .iter()
        .map(|&d| {
            equilibrium(&OscillatorParams::new(1.0, 3.0, ForceCoefficients::new(0.01, d)).unwrap())
                .unwrap()
        })
        .collect();
    assert!(roots.windows(2).all(|w| w[0] < w[1]), "{roots:?}");
}
