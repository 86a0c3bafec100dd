use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use slewing_core::config::DEFAULT_CONFIG;
use slewing_core::STIFFNESS_HEADER;

fn slewing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slewing")).args(args).output().expect("binary runs")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let p = dir.join("suite.toml");
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn validate_accepts_the_shipped_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), DEFAULT_CONFIG);
    let out = slewing(&["validate", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("10 runs valid"));
    assert!(stdout.contains("case3_unclamped"));
}

#[test]
fn validate_names_the_broken_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), &DEFAULT_CONFIG.replacen("osculation = 0.943", "osculation = 1.2", 1));
    let out = slewing(&["validate", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("osculation"));
}

#[test]
fn missing_config_is_a_usage_error() {
    let out = slewing(&["validate", "/nonexistent/suite.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_prints_one_case() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), DEFAULT_CONFIG);
    let out = slewing(&["capacity", cfg.to_str().unwrap(), "--case", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let stdout = text(&out.stdout);
    let newtons: f64 = stdout
        .split(['(', ')'])
        .nth(1)
        .and_then(|s| s.trim_end_matches(" N").parse().ok())
        .expect("capacity in newtons");
    assert!((newtons - 674_240.0).abs() <= 0.05 * 674_240.0, "{stdout}");

    let out = slewing(&["capacity", cfg.to_str().unwrap(), "--case", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_writes_selected_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), DEFAULT_CONFIG);
    let out_dir = dir.path().join("out");
    let out = slewing(&[
        "run",
        cfg.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--cases",
        "1,3",
        "--bc",
        "unclamped",
        "--steps",
        "60",
        "--svg",
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    for name in [
        "summary.csv",
        "summary.txt",
        "manifest.txt",
        "case1_unclamped_stiffness.csv",
        "case3_unclamped_trajectory.csv",
        "stiffness_unclamped.svg",
        "contact_angle_unclamped.svg",
    ] {
        assert!(out_dir.join(name).is_file(), "{name} missing");
    }
    assert!(!out_dir.join("case1_clamped_stiffness.csv").exists());
    assert!(!out_dir.join("stiffness_clamped.svg").exists());
    let curve = fs::read_to_string(out_dir.join("case1_unclamped_stiffness.csv")).unwrap();
    let mut lines = curve.lines();
    assert_eq!(lines.next(), Some(STIFFNESS_HEADER));
    assert_eq!(lines.next(), Some("0.0,0.0,0.0,45.0,0.0,0.0,0.0,0.0,0.0,none"));
    assert_eq!(lines.count(), 60);
    assert_eq!(fs::read_to_string(out_dir.join("summary.csv")).unwrap().lines().count(), 3);
}

#[test]
fn unknown_case_id_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), DEFAULT_CONFIG);
    let out = slewing(&["run", cfg.to_str().unwrap(), "--cases", "7", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("case 7"));
}

#[test]
fn failed_cases_give_a_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let body = DEFAULT_CONFIG.replacen("pressure_limit_mpa = 4200.0", "pressure_limit_mpa = 1.0e9", 1);
    let cfg = write_config(dir.path(), &body);
    let out_dir = dir.path().join("out");
    let out = slewing(&["run", cfg.to_str().unwrap(), "--cases", "2", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("FAILED case2_clamped"));
    assert!(out_dir.join("failures.csv").is_file());
}

#[test]
fn empty_selection_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let head = DEFAULT_CONFIG.split("[[case]]").next().unwrap();
    let cfg = write_config(dir.path(), head);
    let out = slewing(&["run", cfg.to_str().unwrap(), "--out", dir.path().join("out").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("no cases selected"));
}

#[test]
fn too_few_steps_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), DEFAULT_CONFIG);
    let out = slewing(&["run", cfg.to_str().unwrap(), "--steps", "1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
