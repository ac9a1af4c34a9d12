use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nrslab"));
    c.env_remove("NRSLAB_SEED");
    c
}

fn write_poly(name: &str) -> PathBuf {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, r#"{"a0": "-6", "roots": ["1", "2", "3"]}"#).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn unknown_suite_exits_2() {
    let out = bin().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_config_exits_2() {
    let cfg = std::env::temp_dir().join("nrslab-bad.cfg");
    std::fs::write(&cfg, "d_max = 40\n").unwrap();
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "verify", "--suite", "newton-series"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn passing_suite_exits_0_and_reports_json() {
    let out = bin()
        .args(["verify", "--suite", "newton-series", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "newton-series");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failed"], 0);
}

#[test]
fn seed_precedence_env_fallback() {
    let out = bin()
        .env("NRSLAB_SEED", "99")
        .args(["verify", "--suite", "newton-series"])
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out)["seed"], 99);
    let out = bin()
        .env("NRSLAB_SEED", "99")
        .args(["verify", "--suite", "newton-series", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out)["seed"], 5);
}

#[test]
fn attractors_reports_exact_points() {
    let poly = write_poly("nrslab-cli-p123.json");
    let out = bin()
        .args(["attractors", "--poly", poly.to_str().unwrap(), "--m", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["m"], 2);
    assert_eq!(v["pass"], true);
    assert!(v["cases"].as_array().map_or(false, |c| !c.is_empty()));
}

#[test]
fn nrs2_csv_has_expected_header() {
    let poly = write_poly("nrslab-cli-p123b.json");
    let csv = std::env::temp_dir().join("nrslab-cli-starts.csv");
    let out = bin()
        .args([
            "nrs2",
            "--poly",
            poly.to_str().unwrap(),
            "--starts",
            "20",
            "--csv",
            csv.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with(
        "start_re0,start_im0,start_re1,start_im1,status,steps,limit0,limit1,matched_i,matched_j"
    ));
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn csv_format_report() {
    let out = bin()
        .args(["verify", "--suite", "newton-series", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().contains("id"));
}
