use std::f64::consts::PI;

use matterwave::specfun::{ellip_e, ellip_k, jacobi_sn_cn_dn, power_integral, quad, PowerKind};
use proptest::prelude::*;

fn integrand(kind: PowerKind, m: f64) -> impl Fn(f64) -> f64 {
    move |z| {
        let t = jacobi_sn_cn_dn(z, m).unwrap();
        match kind {
            PowerKind::Sn2 => t.sn.powi(2),
            PowerKind::Sn4 => t.sn.powi(4),
            PowerKind::Cn2 => t.cn.powi(2),
            PowerKind::Cn4 => t.cn.powi(4),
        }
    }
}

#[test]
fn legendre_relation_on_a_grid() {
    for i in 1..100 {
        let m = i as f64 / 100.0;
        let (k, e) = (ellip_k(m).unwrap(), ellip_e(m).unwrap());
        let (k1, e1) = (ellip_k(1.0 - m).unwrap(), ellip_e(1.0 - m).unwrap());
        let lhs = e * k1 + e1 * k - k * k1;
        assert!((lhs - PI / 2.0).abs() < 1e-12, "m={m}: {lhs}");
    }
}

#[test]
fn k_increases_and_e_decreases() {
    let grid: Vec<f64> = (0..100).map(|i| i as f64 / 100.0).collect();
    for w in grid.windows(2) {
        assert!(ellip_k(w[0]).unwrap() < ellip_k(w[1]).unwrap());
        assert!(ellip_e(w[0]).unwrap() > ellip_e(w[1]).unwrap());
    }
}

#[test]
fn power_integrals_match_quadrature() {
    let ms = [0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
    for m in ms {
        let k = ellip_k(m).unwrap();
        for kind in PowerKind::ALL {
            let closed = power_integral(kind, m).unwrap();
            let numeric = quad(integrand(kind, m), 0.0, k, 1e-12).unwrap();
            assert!(
                (closed - numeric).abs() < 1e-10,
                "{kind} m={m}: {closed} vs {numeric}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pythagorean_identities(z in -20.0f64..20.0, m in 0.0f64..=1.0) {
        let t = jacobi_sn_cn_dn(z, m).unwrap();
        prop_assert!((t.sn * t.sn + t.cn * t.cn - 1.0).abs() < 1e-12);
        prop_assert!((t.dn * t.dn + m * t.sn * t.sn - 1.0).abs() < 1e-12);
    }

    #[test]
    fn periodicity(z in -5.0f64..5.0, m in 0.0f64..0.999) {
        let k = ellip_k(m).unwrap();
        let a = jacobi_sn_cn_dn(z, m).unwrap();
        let b = jacobi_sn_cn_dn(z + 4.0 * k, m).unwrap();
        prop_assert!((a.sn - b.sn).abs() < 1e-10);
        prop_assert!((a.cn - b.cn).abs() < 1e-10);
        let c = jacobi_sn_cn_dn(z + 2.0 * k, m).unwrap();
        prop_assert!((a.dn - c.dn).abs() < 1e-10);
        prop_assert!((a.sn + c.sn).abs() < 1e-10);
    }

    #[test]
    fn random_power_integrals(m in 0.001f64..0.999) {
        let k = ellip_k(m).unwrap();
        for kind in PowerKind::ALL {
            let closed = power_integral(kind, m).unwrap();
            let numeric = quad(integrand(kind, m), 0.0, k, 1e-12).unwrap();
            prop_assert!((closed - numeric).abs() < 1e-10);
        }
    }
}
