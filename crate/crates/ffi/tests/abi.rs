use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use matterwave_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(mw_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn status_codes_and_messages() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(mw_ellip_e(0.5, &mut v), MwStatus::Ok);
        assert!((v - 1.3506438810476755).abs() < 1e-14);
        assert_eq!(mw_ellip_e(-0.1, &mut v), MwStatus::InvalidArgument);
        assert!(last_error().contains("out of domain"));
        assert_eq!(mw_ellip_k(0.5, ptr::null_mut()), MwStatus::NullPointer);
        assert_eq!(
            mw_power_integral(MwPowerKind::Sn2, 0.5, &mut v),
            MwStatus::Ok
        );
        assert!((v - 1.0068615925073928).abs() < 1e-13);
    }
}

#[test]
fn atom_coefficient_checks_populations() {
    let params = mw_box_params_default();
    let mut c = MwForceCoefficients::default();
    let levels = [1u32, 2];
    unsafe {
        let probs = [0.5, 0.5];
        assert_eq!(
            mw_atom_coefficient(levels.as_ptr(), probs.as_ptr(), 2, &params, &mut c),
            MwStatus::Ok
        );
        assert!((c.c - 2.5 * std::f64::consts::PI.powi(2)).abs() < 1e-12);
        let bad = [0.5, 0.4];
        assert_eq!(
            mw_atom_coefficient(levels.as_ptr(), bad.as_ptr(), 2, &params, &mut c),
            MwStatus::InvalidArgument
        );
    }
}

#[test]
fn mode_handle_lifecycle() {
    let params = mw_box_params_default();
    let mut mode = ptr::null_mut();
    unsafe {
        assert_eq!(
            mw_gp_mode_new(-5.0, 1.0, 2, &params, &mut mode),
            MwStatus::Ok
        );
        let mut info = std::mem::MaybeUninit::<MwGpModeInfo>::uninit();
        assert_eq!(mw_gp_mode_info(mode, info.as_mut_ptr()), MwStatus::Ok);
        let info = info.assume_init();
        assert_eq!(info.branch, MwBranch::Attractive);
        assert_eq!(info.j, 2);
        let mut psi = 1.0;
        assert_eq!(mw_gp_mode_psi(mode, 0.0, &mut psi), MwStatus::Ok);
        assert!(psi.abs() < 1e-12);
        assert_eq!(
            mw_gp_mode_psi(mode, 2.0, &mut psi),
            MwStatus::InvalidArgument
        );
        let mut f = MwForceCoefficients::default();
        assert_eq!(
            mw_gp_mode_force_coefficients(mode, 1.0, &mut f),
            MwStatus::Ok
        );
        assert!(f.c > 0.0 && f.d < 0.0);
        mw_gp_mode_free(mode);

        let mut other = ptr::null_mut();
        assert_eq!(
            mw_gp_mode_new(0.0, 1.0, 1, &params, &mut other),
            MwStatus::InvalidArgument
        );
        assert!(other.is_null());
        mw_gp_mode_free(ptr::null_mut());
    }
}

#[test]
fn integration_and_billiard_handles() {
    let osc = MwOscillator {
        omega: 1.0,
        q0: 1.0,
        c: 0.01,
        d: 0.0,
    };
    let mut traj = ptr::null_mut();
    unsafe {
        let init = MwWallState {
            t: 0.0,
            q: 1.1,
            qdot: 0.0,
        };
        assert_eq!(
            mw_integrate(&osc, init, 50.0, ptr::null(), &mut traj),
            MwStatus::Ok
        );
        let mut stats = MwTrajectoryStats::default();
        assert_eq!(mw_trajectory_stats(traj, &mut stats), MwStatus::Ok);
        assert!((stats.q_min - 0.9197326453836803).abs() < 1e-6);
        mw_trajectory_free(traj);

        let collapse = MwOscillator {
            omega: 0.0,
            q0: 1.0,
            c: 0.0,
            d: -50.0,
        };
        let mut t2 = ptr::null_mut();
        assert_eq!(
            mw_integrate(&collapse, init, 50.0, ptr::null(), &mut t2),
            MwStatus::Singularity
        );
        assert!(t2.is_null());

        let params = MwBilliardParams {
            m_atom: 1e-3,
            m_wall: 1.0,
            omega: 60f64.sqrt(),
            q0: 1.0,
        };
        let start = MwBilliardState {
            t: 0.0,
            q: 0.0,
            v: 25.0,
            wall_q: 1.1,
            wall_v: 0.0,
        };
        let mut run = ptr::null_mut();
        assert_eq!(
            mw_billiard_simulate(&params, start, 10.0, 0.01, &mut run),
            MwStatus::Ok
        );
        let (mut data, mut len) = (ptr::null(), 0usize);
        assert_eq!(
            mw_billiard_run_samples(run, &mut data, &mut len),
            MwStatus::Ok
        );
        let samples = std::slice::from_raw_parts(data, len);
        assert!(samples.iter().all(|s| s.q >= 0.0 && s.q <= s.wall_q));
        let mut bs = MwBilliardStats::default();
        assert_eq!(mw_billiard_run_stats(run, &mut bs), MwStatus::Ok);
        assert!(bs.impacts > 0 && bs.energy_drift < 1e-9);
        mw_billiard_run_free(run);
    }
}

#[test]
fn scenario_entry_points() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = CString::new(tmp.path().to_str().unwrap()).unwrap();
    let ini = CString::new(
        "[system]\nkind = quantum_atom\nB = 0.1\n[oscillator]\nomega = 1\nq0 = 1\n\
         [initial]\nwall_q = 1.8\n[output]\nname = custom\n",
    )
    .unwrap();
    let mut s = std::mem::MaybeUninit::<MwRunSummary>::uninit();
    unsafe {
        assert_eq!(
            mw_run_config(ini.as_ptr(), dir.as_ptr(), s.as_mut_ptr()),
            MwStatus::Ok
        );
        let s = s.assume_init();
        assert!((s.q_min - 0.4921).abs() < 1e-3);
        assert!(tmp.path().join("custom.csv").exists());

        let bad = CString::new("[system]\nkind = nothing\n").unwrap();
        let mut s2 = std::mem::MaybeUninit::<MwRunSummary>::uninit();
        assert_eq!(
            mw_run_config(bad.as_ptr(), dir.as_ptr(), s2.as_mut_ptr()),
            MwStatus::Config
        );
        assert!(last_error().contains("unknown system kind"));
    }
}

/// Compiles `tests/c/smoke.c` against the generated header and the static
/// library and runs it.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/abi-* -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libmatterwave_ffi.a");
    assert!(
        lib.exists(),
        "static library not found at {}",
        lib.display()
    );

    let tmp = tempfile::tempdir().unwrap();
    let bin = tmp.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success(), "C smoke program failed to compile");
    let out = Command::new(&bin).arg(tmp.path()).output().unwrap();
    assert!(
        out.status.success(),
        "smoke program failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
