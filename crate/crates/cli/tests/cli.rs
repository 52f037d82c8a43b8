//! End-to-end runs of the minfix binary: exit codes, report formats and
//! reproducibility of report bodies under a fixed seed.

use std::process::Command;

fn minfix() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minfix"))
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn witness_affine_predicted_and_verified() {
    let out = minfix()
        .args([
            "witness", "--case", "affine", "--d", "3", "--p", "2", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["items"]["predicted_fix"], "1");
    assert_eq!(v["items"]["verified_fix"], "1");
    assert_eq!(v["items"]["matches"], true);
}

#[test]
fn witness_affine_p_odd() {
    let out = minfix()
        .args([
            "witness", "--case", "affine", "--d", "2", "--p", "3", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["items"]["predicted_fix"], "4");
    assert_eq!(v["items"]["verified_fix"], "4");
}

#[test]
fn polydensity_x4_plus_1_is_zero() {
    let out = minfix()
        .args([
            "polydensity",
            "--poly",
            "x^4+1",
            "--bound",
            "100000",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["items"]["qualifying_primes"], 0);
    assert_eq!(v["items"]["density_estimate"], 0.0);
}

#[test]
fn polydensity_bad_poly_exits_2() {
    let out = minfix()
        .args(["polydensity", "--poly", "x^+2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let good = write_temp(
        "minfix_a5.json",
        r#"{"degree":5,"generators":["(1,2,3)","(1,2,3,4,5)"]}"#,
    );
    let out = minfix()
        .args(["verify", "--group", good.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let regular = write_temp(
        "minfix_c7.json",
        r#"{"degree":7,"generators":["(1,2,3,4,5,6,7)"]}"#,
    );
    let out = minfix()
        .args(["verify", "--group", regular.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let bad = write_temp("minfix_bad.json", "not json");
    let out = minfix()
        .args(["verify", "--group", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = minfix().args(["nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_modes_agree() {
    let good = write_temp(
        "minfix_m11ish.json",
        r#"{"degree":6,"generators":["(1,2,3)","(2,3,4,5,6)"]}"#,
    );
    let mut fixes = Vec::new();
    for mode in ["exhaustive", "classes", "random"] {
        let out = minfix()
            .args([
                "verify",
                "--group",
                good.to_str().unwrap(),
                "--mode",
                mode,
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "mode {mode}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        fixes.push(v["items"]["certificate"]["fix"].as_u64().unwrap());
    }
    assert_eq!(fixes[0], fixes[1]);
    assert!(
        fixes[2] >= fixes[0],
        "random mode reports a valid (possibly larger) fix"
    );
}

#[test]
fn report_bodies_reproduce_byte_identically() {
    let good = write_temp(
        "minfix_repro.json",
        r#"{"degree":5,"generators":["(1,2,3)","(1,2,3,4,5)"]}"#,
    );
    let strip_timing = |bytes: &[u8]| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v.as_object_mut().unwrap().remove("item_timings");
        v
    };
    let run = || {
        minfix()
            .args([
                "verify",
                "--group",
                good.to_str().unwrap(),
                "--mode",
                "random",
                "--format",
                "json",
            ])
            .env("MINFIX_SEED", "12345")
            .output()
            .unwrap()
    };
    let a = strip_timing(&run().stdout);
    let b = strip_timing(&run().stdout);
    assert_eq!(
        serde_json::to_vec(&a).unwrap(),
        serde_json::to_vec(&b).unwrap(),
        "same seed and inputs must reproduce the body"
    );
    assert_eq!(a["body_hash"], b["body_hash"]);
    assert_eq!(a["seed"], 12345);
}

#[test]
fn verify_strict_flag() {
    let good = write_temp(
        "minfix_strict.json",
        r#"{"degree":5,"generators":["(1,2,3)","(1,2,3,4,5)"]}"#,
    );
    let out = minfix()
        .args(["verify", "--group", good.to_str().unwrap(), "--strict"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "1 < 5 is strict");
}

#[test]
fn witness_param_range_is_usage_error() {
    let out = minfix()
        .args(["witness", "--case", "affine", "--d", "1", "--p", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = minfix()
        .args(["witness", "--case", "affine", "--d", "2", "--p", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "composite p is rejected");
}

#[test]
fn census_small_run_passes() {
    let out = minfix()
        .args(["census", "--max-degree", "12", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items = v["items"].as_array().unwrap();
    assert!(items.len() >= 10);
    for item in items {
        if item["status"] == "ok" {
            assert_eq!(item["weak"], true);
        }
    }
}

#[test]
fn census_degree_60_includes_diagonal_row() {
    let out = minfix()
        .args(["census", "--max-degree", "60", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items = v["items"].as_array().unwrap();
    let diag = items
        .iter()
        .find(|i| i["kind"] == "diagonal")
        .expect("the degree-60 diagonal member is present");
    assert_eq!(diag["fix"], 3);
    assert_eq!(diag["degree"], 60);
    assert_eq!(diag["strict"], true, "27 < 60");
}

#[test]
fn census_jobs_reproduce() {
    let run = |jobs: &str| {
        let out = minfix()
            .args([
                "census",
                "--max-degree",
                "10",
                "--jobs",
                jobs,
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        // the jobs parameter itself is part of the body; compare items only
        v["items"].clone()
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn census_reports_per_item_timings() {
    let out = minfix()
        .args(["census", "--max-degree", "8", "--format", "json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let timings = v["item_timings"].as_array().unwrap();
    assert_eq!(timings.len(), v["items"].as_array().unwrap().len());
    for t in timings {
        assert!(t["ms"].is_u64());
    }
}

#[test]
fn verify_jobs_agree() {
    let good = write_temp(
        "minfix_jobs.json",
        r#"{"degree":6,"generators":["(1,2,3)","(2,3,4,5,6)"]}"#,
    );
    let run = |jobs: &str| {
        let out = minfix()
            .args([
                "verify",
                "--group",
                good.to_str().unwrap(),
                "--jobs",
                jobs,
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["items"]["certificate"]["element"].clone()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn bounds_sweep_passes() {
    let out = minfix().args(["bounds", "--sweep"]).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("PASS").count(), 4);
    assert_eq!(text.matches("FAIL").count(), 0);

    let out = minfix().args(["bounds"]).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(2),
        "bounds without --sweep is a usage error"
    );
}
