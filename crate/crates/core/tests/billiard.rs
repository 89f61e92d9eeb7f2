use matterwave::billiard::{
    collide, fixed_wall_pressure, simulate, BilliardOptions, BilliardParams, BilliardState,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn collisions_conserve_momentum_and_energy(
        v in -100.0f64..100.0,
        w in -10.0f64..10.0,
        m in 1e-3f64..10.0,
        mw in 1e-3f64..1e3,
    ) {
        let (v2, w2) = collide(v, w, m, mw);
        let p = m * v + mw * w;
        let e = m * v * v + mw * w * w;
        prop_assert!((m * v2 + mw * w2 - p).abs() <= 1e-12 * (m * v.abs() + mw * w.abs()));
        prop_assert!((m * v2 * v2 + mw * w2 * w2 - e).abs() <= 1e-12 * e);
    }
}

#[test]
fn ordering_is_kept_through_every_event() {
    let p = BilliardParams::new(1e-3, 1.0, 60f64.sqrt(), 1.0).unwrap();
    let init = BilliardState {
        t: 0.0,
        q: 0.0,
        v: 25.0,
        wall_q: 1.1,
        wall_v: 0.0,
    };
    let run = simulate(init, &p, 20.0, &BilliardOptions::default()).unwrap();
    assert!(run.events.len() > 100);
    for ev in &run.events {
        assert!(ev.after.q >= 0.0 && ev.after.q <= ev.after.wall_q);
    }
    for s in &run.samples {
        assert!(s.q >= 0.0 && s.q <= s.wall_q);
    }
    assert!(run.stats.energy_drift < 1e-9);
    assert!(run.stats.wall_midpoint > 1.0);
}

#[test]
fn pinned_wall_force_is_mv2_over_q() {
    let f = fixed_wall_pressure(25.0, 3.0, 1.0, 1000.0 * 2.0 * 3.0 / 25.0).unwrap();
    assert!((f - 625.0 / 3.0).abs() < 0.005 * 625.0 / 3.0);
    let f2 = fixed_wall_pressure(25.0, 6.0, 1.0, 1000.0 * 2.0 * 6.0 / 25.0).unwrap();
    assert!((f / f2 - 2.0).abs() < 0.01);
}

#[test]
fn heavy_wall_keeps_atom_speed() {
    // A free heavy wall still creeps outward by ~2e4 m/M of Q over 100
    // bounces, so the spring is made stiff enough to pin it.
    let p = BilliardParams::new(1.0, 1e9, 1e3, 1.0).unwrap();
    let init = BilliardState {
        t: 0.0,
        q: 0.0,
        v: 2.0,
        wall_q: 1.0,
        wall_v: 0.0,
    };
    let run = simulate(init, &p, 100.0, &BilliardOptions::default()).unwrap();
    assert!(run.stats.impacts >= 100);
    let worst = run
        .events
        .iter()
        .map(|ev| (ev.after.v.abs() - 2.0).abs() / 2.0)
        .fold(0.0, f64::max);
    assert!(worst < 1e-6, "speed changed by {worst:e}");
}

#[test]
fn pinned_wall_force_scales_with_v_squared() {
    let q = 2.0;
    let slow = fixed_wall_pressure(5.0, q, 1.0, 1e4).unwrap();
    let fast = fixed_wall_pressure(10.0, q, 1.0, 1e4).unwrap();
    assert!((fast / slow - 4.0).abs() < 1e-2);
}
