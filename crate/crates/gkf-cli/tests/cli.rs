//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn gkf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkf"))
        .args(args)
        .env_remove("GKF_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cohomology_weight_four_table() {
    let out = gkf(&["cohomology", "--n", "2", "--weight", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0    0    0    1    3"), "dims row:\n{text}");
    assert!(text.contains("0    0    0    0    2"), "betti row:\n{text}");
    assert!(text.contains("Euler characteristic: 2"), "{text}");
}

#[test]
fn cohomology_json_weight_two() {
    let out = gkf(&["cohomology", "--n", "2", "--weight", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["weight"], 2);
    assert_eq!(v["euler"], 1);
    assert_eq!(v["degrees"][2]["betti"], 1);
    assert_eq!(v["degrees"][2]["dim"], 1);
}

#[test]
fn odd_weight_strict_fails() {
    let out = gkf(&["cohomology", "--n", "2", "--weight", "3", "--strict"]);
    assert!(!out.status.success());
    let out = gkf(&["cohomology", "--n", "2", "--weight", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Euler characteristic: 0"));
}

#[test]
fn weight_six_needs_heavy_or_cache() {
    let out = gkf(&["cohomology", "--n", "2", "--weight", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("skipped"), "{text}");
    assert!(!text.contains("Betti"), "{text}");
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("--heavy"), "{err}");
}

#[test]
fn slice_dims_weight_six() {
    let out = gkf(&["slice-dims", "--n", "2", "--weight", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree 4: dim 176890"), "{text}");
    assert!(text.contains("degree 6: dim 38760"), "{text}");
}

#[test]
fn tensor_matches_published_list() {
    // V_{3,1} (x) V_4, the twelve-summand list
    let out = gkf(&["tensor", "--n", "2", "3,1", "4,0", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let m = v["multiplicities"].as_object().unwrap();
    assert_eq!(m.len(), 12);
    assert_eq!(m["V_{3,1}"], 2);
    assert_eq!(m["V_{2}"], 1);
    assert_eq!(m["V_{7,1}"], 1);
    assert_eq!(v["dimension"], 35 * 35);
}

#[test]
fn dim_subcommand() {
    let out = gkf(&["dim", "--n", "2", "5,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("105"));
    let out = gkf(&["dim", "--n", "1", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 4"));
    // malformed / non-dominant labels are rejected
    assert!(!gkf(&["dim", "--n", "2", "1,2"]).status.success());
    assert!(!gkf(&["dim", "--n", "2", "x"]).status.success());
}

#[test]
fn decompose_small_slice() {
    let out = gkf(&[
        "decompose", "--n", "2", "--weight", "2", "--degree", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 190);
    assert_eq!(v["total_dimension"], 190);
    let m = v["multiplicities"].as_object().unwrap();
    assert_eq!(m.len(), 6);
    assert_eq!(m["V_{0}"], 1);
    assert_eq!(m["V_{5,1}"], 1);
}

#[test]
fn decompose_giant_slice_refuses_without_heavy() {
    let out = gkf(&["decompose", "--n", "2", "--weight", "6", "--degree", "4"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--heavy"));
}

#[test]
fn cache_and_emit_bases_round_trip() {
    let dir = std::env::temp_dir().join(format!("gkf-cli-test-{}", std::process::id()));
    let cache_dir = dir.join("cache");
    let bases_dir = dir.join("bases");
    let out = gkf(&[
        "cohomology",
        "--n",
        "2",
        "--weight",
        "4",
        "--cache",
        cache_dir.to_str().unwrap(),
        "--emit-bases",
        bases_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(cache_dir.join("inv-n2-w4-m3-g3-v1.txt").is_file());
    let basis = std::fs::read_to_string(bases_dir.join("basis-n2-w4-m3.txt")).unwrap();
    assert!(basis.contains("Z^{3}_"), "Z-notation expected:\n{basis}");
    assert!(basis.contains("∧"));

    // GKF_CACHE is honored as the fallback cache location
    let out = Command::new(env!("CARGO_BIN_EXE_gkf"))
        .args(["cohomology", "--n", "2", "--weight", "4"])
        .env("GKF_CACHE", cache_dir.as_os_str())
        .output()
        .unwrap();
    assert!(out.status.success());

    let _ = std::fs::remove_dir_all(dir);
}
