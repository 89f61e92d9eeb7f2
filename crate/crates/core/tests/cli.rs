use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn matterwave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matterwave"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn list_presets_shows_all_twelve() {
    let out = matterwave(&["list-presets"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 12);
    assert!(text.contains("fig2b") && text.contains("fig5-D=-0.5"));
}

#[test]
fn written_config_reproduces_the_preset_run() {
    let tmp = tempfile::tempdir().unwrap();
    let out = matterwave(&["preset-config", "fig5-repulsive"]);
    assert!(out.status.success());
    let cfg_path = tmp.path().join("fig5.ini");
    fs::write(&cfg_path, &out.stdout).unwrap();

    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    assert!(
        matterwave(&["run", "--preset", "fig5-repulsive", "--out", path(&a)])
            .status
            .success()
    );
    let run = matterwave(&["run", "--config", path(&cfg_path), "--out", path(&b)]);
    assert!(run.status.success());
    let summary = String::from_utf8(run.stdout).unwrap();
    assert!(summary.contains("equilibrium = 3.196"), "{summary}");
    assert_eq!(
        fs::read(a.join("fig5-D=+2.csv")).unwrap(),
        fs::read(b.join("fig5-D=+2.csv")).unwrap()
    );
}

#[test]
fn overrides_apply() {
    let tmp = tempfile::tempdir().unwrap();
    let out = matterwave(&[
        "run",
        "--preset",
        "fig1",
        "--out",
        path(tmp.path()),
        "--t-end",
        "2",
        "--sample-dt",
        "0.5",
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(tmp.path().join("fig1.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 5);
    assert!(csv
        .lines()
        .last()
        .unwrap()
        .starts_with("2.0000000000000000e0,"));
}

#[test]
fn validation_failures_exit_2() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(
        matterwave(&["run", "--preset", "fig9"]).status.code(),
        Some(2)
    );
    assert_eq!(matterwave(&["run"]).status.code(), Some(2));
    assert_eq!(
        matterwave(&["run", "--preset", "fig1", "--tol", "-1"])
            .status
            .code(),
        Some(2)
    );
    let bad = tmp.path().join("bad.ini");
    fs::write(&bad, "[system]\nkind = quantum_atom\n").unwrap();
    assert_eq!(
        matterwave(&["run", "--config", path(&bad)]).status.code(),
        Some(2)
    );
    assert_eq!(
        matterwave(&["run", "--config", "/nonexistent.ini"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(matterwave(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn numerical_failures_exit_3() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("collapse.ini");
    fs::write(
        &cfg,
        format!(
            "[system]\nkind = bec\nC = 0\nD = -50\n[oscillator]\nomega = 0\nq0 = 1\n\
             [initial]\nwall_q = 1\n[output]\ndir = {}\nname = collapse\n",
            path(tmp.path())
        ),
    )
    .unwrap();
    let out = matterwave(&["run", "--config", path(&cfg)]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn batch_writes_every_preset() {
    let tmp = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_matterwave"))
        .args(["run", "--all", "--out", path(tmp.path())])
        .env("MATTERWAVE_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let csvs = fs::read_dir(tmp.path())
        .unwrap()
        .filter(|e| {
            e.as_ref()
                .unwrap()
                .path()
                .extension()
                .is_some_and(|x| x == "csv")
        })
        .count();
    assert_eq!(csvs, 12);
}

#[test]
fn estimate_reports_code_units() {
    let out = matterwave(&[
        "estimate", "--n", "1", "--m-atom", "1.0e-26", "--m-wall", "1.0e-20", "--omega", "6.283e7",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("B_code = "));
    assert_eq!(
        matterwave(&["estimate", "--m-atom", "-1", "--m-wall", "1", "--omega", "1"])
            .status
            .code(),
        Some(2)
    );
}
