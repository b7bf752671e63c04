use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use estar_cli::{run, RunManifest};

fn estar(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_estar")).current_dir(dir).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("estar").chain(args.iter().copied()))
}

#[test]
fn sweep_resume_keeps_prefix_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["sweep", "--t-max", "1000", "--out", "sweep.csv"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("sweep.csv"));
    let original = fs::read(dir.path().join("sweep.csv")).unwrap();

    let out = estar(dir.path(), &["sweep", "--resume", "sweep.csv", "--t-max", "2000"]);
    assert!(out.status.success());
    let extended = fs::read(dir.path().join("sweep.csv")).unwrap();
    assert!(extended.len() > original.len());
    assert_eq!(&extended[..original.len()], &original[..]);

    let out = estar(dir.path(), &["sweep", "--t-max", "2000", "--out", "fresh.csv"]);
    assert!(out.status.success());
    assert_eq!(fs::read(dir.path().join("fresh.csv")).unwrap(), extended);

    let text = String::from_utf8(extended).unwrap();
    let file = estar::meansq::parse_checkpoints(&text).unwrap();
    assert_eq!(file.rows.len(), 21);
    assert_eq!(file.rows.last().unwrap().t, 2000.0);
}

#[test]
fn resume_past_an_off_interval_end() {
    let dir = tempfile::tempdir().unwrap();
    assert!(estar(dir.path(), &["sweep", "--t-max", "250", "--out", "s.csv"]).status.success());
    let first = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    assert!(first.lines().last().unwrap().starts_with("2.5000000000000000e2"));
    assert!(estar(dir.path(), &["sweep", "--resume", "s.csv", "--t-max", "400"]).status.success());
    assert!(estar(dir.path(), &["sweep", "--t-max", "400", "--out", "f.csv"]).status.success());
    assert_eq!(fs::read(dir.path().join("s.csv")).unwrap(), fs::read(dir.path().join("f.csv")).unwrap());
}

#[test]
fn resume_with_other_config_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    assert!(estar(dir.path(), &["sweep", "--t-max", "200", "--out", "s.csv"]).status.success());
    let before = fs::read(dir.path().join("s.csv")).unwrap();
    let out = estar(dir.path(), &["sweep", "--resume", "s.csv", "--t-max", "400", "--nodes", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(fs::read(dir.path().join("s.csv")).unwrap(), before);
}

#[test]
fn constants_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["constants"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["gamma", "zeta2", "zeta32", "C", "A", "B", "a1"] {
        assert!(v[key].as_f64().unwrap() > 0.0, "{key}");
    }
    assert!((v["zeta2"].as_f64().unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["constants"]), 0);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["constants", "--bogus"]), 2);
    assert_eq!(code(&["delta", "--x", "twelve"]), 2);
    assert_eq!(code(&["sweep", "--t-max", "100", "--precision", "quad", "--out", "x.csv"]), 2);
    assert_eq!(code(&["fit", "--grid", "linear:1:2"]), 2);
    assert_eq!(code(&["atkinson", "--t", "1000", "--n-cutoff", "100"]), 1);
    assert_eq!(code(&["mainterm", "--t", "0.5"]), 1);
    // t_max off the sample grid.
    assert_eq!(code(&["sweep", "--t-max", "100.01", "--out", "/nonexistent/x.csv"]), 1);
}

#[test]
fn writes_land_whole_with_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["delta", "--x", "1000.5", "--out", "d.json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("d.json")).unwrap()).unwrap();
    let a = v["delta_star"].as_f64().unwrap();
    let b = v["delta_star_combination"].as_f64().unwrap();
    assert!((a - b).abs() < 1e-9);

    let m: RunManifest =
        serde_json::from_slice(&fs::read(dir.path().join("d.json.manifest.json")).unwrap()).unwrap();
    assert_eq!(m.params["x"], "1000.5");
    let again = estar(dir.path(), &["delta", "--x", "1000.5", "--out", "e.json"]);
    assert!(again.status.success());
    let m2: RunManifest =
        serde_json::from_slice(&fs::read(dir.path().join("e.json.manifest.json")).unwrap()).unwrap();
    assert_eq!(m.config_hash, m2.config_hash);
    assert_eq!(fs::read(dir.path().join("d.json")).unwrap(), fs::read(dir.path().join("e.json")).unwrap());

    let leftovers: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.starts_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty(), "{leftovers:?}");
}

#[test]
fn failed_run_leaves_existing_target_alone() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("a.json");
    fs::write(&target, "keep").unwrap();
    let out = estar(dir.path(), &["atkinson", "--t", "1000", "--n-cutoff", "10", "--out", "a.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(fs::read_to_string(&target).unwrap(), "keep");
}

#[test]
fn report_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["report", "--grid", "dyadic:100:1600:2", "--out", "rep"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = dir.path().join("rep");
    let ratios = fs::read_to_string(rep.join("ratios.csv")).unwrap();
    let mut lines = ratios.lines();
    assert_eq!(lines.next(), Some("T,I_star,ratio_14,e2_ratio"));
    assert_eq!(lines.count(), 9);

    let overlay = fs::read_to_string(rep.join("fit_overlay.csv")).unwrap();
    let rows: Vec<Vec<&str>> = overlay.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.len() == 3 && !r[1].is_empty() && !r[2].is_empty()));

    assert!(fs::read_to_string(rep.join("README.md")).unwrap().contains("ratio_14"));
    let summary: serde_json::Value = serde_json::from_slice(&fs::read(rep.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["rows"], 9);
    assert!(rep.join("moments.csv").exists() && rep.join("manifest.json").exists());
}

#[test]
fn empty_report_has_headers_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["report", "--grid", "dyadic:5000:9000", "--t-max", "50", "--out", "rep"]);
    assert!(out.status.success());
    let rep = dir.path().join("rep");
    assert_eq!(fs::read_to_string(rep.join("ratios.csv")).unwrap(), "T,I_star,ratio_14,e2_ratio\n");
    assert_eq!(fs::read_to_string(rep.join("fit_overlay.csv")).unwrap(), "T,measured,predicted\n");
    assert_eq!(fs::read_to_string(rep.join("moments.csv")).unwrap(), "T,M1,M2,M4,M5\n");
}

#[test]
fn small_commands_print_results() {
    let dir = tempfile::tempdir().unwrap();
    let out = estar(dir.path(), &["sieve", "--limit", "12", "--out", "d.csv"]);
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("d.csv")).unwrap();
    assert_eq!(csv.lines().nth(12), Some("12,6,35,11"));

    let out = estar(dir.path(), &["voronoi", "--x", "1000", "--n-cutoff", "500"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["deviation"].as_f64().unwrap() < 100.0 * v["error_bound"].as_f64().unwrap());

    let out = estar(dir.path(), &["fit", "--grid", "dyadic:1e5:1e6:2", "--a", "0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["c3_ratio"].as_f64().unwrap() - 1.0).abs() < 0.25);

    let out = estar(dir.path(), &["mainterm", "--t", "1000"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mainterm"]["n_max"], 100);
    assert!(v["mainterm"]["value"].as_f64().unwrap() > 0.0);

    let out = estar(dir.path(), &["atkinson", "--t", "500"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["difference_over_log2"].as_f64().unwrap() < 0.2);
}
