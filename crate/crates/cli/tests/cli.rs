use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crw-spectra"))
        .args(args)
        .env_remove("CRW_SPECTRA_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn spectrum_writes_json_and_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("k4.json");
    let csv_path = dir.path().join("k4.csv");
    let out = bin(&[
        "spectrum",
        "--family",
        "complete",
        "--n",
        "4",
        "--method",
        "crw-regular",
        "--check-oracle",
        "--output",
        out_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["count"], 12);
    assert_eq!(report["match"]["pass"], true);
    let csv = fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv.lines().count(), 13);
    assert!(csv.starts_with("label,re,im,group\n"));
}

#[test]
fn tree_file_is_rejected_by_regular_method() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.txt");
    fs::write(&path, "4 3\n1 2\n2 3\n3 4\n").unwrap();
    let out = bin(&["spectrum", "--file", path.to_str().unwrap(), "--method", "crw-regular"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn zeta_reports_pole_points_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.txt");
    fs::write(&path, "4 3\n1 2\n2 3\n3 4\n").unwrap();
    let out = bin(&["zeta", "--file", path.to_str().unwrap(), "--u", "1,0.2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["points"][0]["pass"], false);
    assert!(v["points"][0]["error"].as_str().unwrap().contains("pole"));
    assert_eq!(v["points"][1]["pass"], true);
}

#[test]
fn zeta_on_triangle() {
    let out = bin(&["zeta", "--family", "cycle", "--n", "3", "--u", "0.5,0.1+0.2i"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    // (1 - u^3)^2 at u = 1/2.
    let direct = v["points"][0]["direct"][0].as_f64().unwrap();
    assert!((direct - 0.765625).abs() < 1e-14);
}

#[test]
fn bad_coin_is_a_usage_error() {
    let out = bin(&["spectrum", "--family", "cycle", "--n", "4", "--method", "crw2-cycle", "--coin", "2,0,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generated_graph_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.txt");
    let out = bin(&["generate", "--family", "petersen", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(fs::read_to_string(&path).unwrap().starts_with("10 15\n"));
    let out = bin(&[
        "spectrum",
        "--file",
        path.to_str().unwrap(),
        "--method",
        "crw2-uniform",
        "--check-oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 30);
}

#[test]
fn verify_seed_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_crw-spectra"))
        .args(["verify", "--suite", "zeta"])
        .env("CRW_SPECTRA_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failed"], 0);
}
