//! End-to-end command line tests: exit codes, schema strictness, file
//! outputs and determinism.

use std::path::Path;
use std::process::Command;

const BALL_SCENARIO: &str = r#"{
  "body": {"kind": "lp_ball", "params": {"p": 2.0, "radius": 1.0}, "center": [0.0, 0.0, 0.0]},
  "surface": {"kind": "sphere", "center": [0.0, 0.0, 0.0], "radius": 3.0},
  "sampling": {"N": 12, "M": 16, "grid_seed": 7}
}"#;

const OFFSET_SCENARIO: &str = r#"{
  "body": {"kind": "lp_ball", "params": {"p": 2.0, "radius": 1.0}, "center": [0.0, 0.0, 0.0]},
  "surface": {"kind": "sphere", "center": [0.5, 0.0, 0.0], "radius": 3.0},
  "sampling": {"N": 12, "M": 16, "grid_seed": 7}
}"#;

const EGG_SCENARIO: &str = r#"{
  "body": {"kind": "trig_series", "params": {"a0": 1.0, "cos": [0.0, 0.0, 0.1]}}
}"#;

fn write(dir: &Path, name: &str, content: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p.to_string_lossy().into_owned()
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_conecheck"))
}

#[test]
fn verified_scenario_exits_zero_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);
    let report = dir.path().join("report.json");
    let code = conecheck::run([
        "conecheck",
        "check-theorem",
        &scenario,
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"verdict\": \"verified\""));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["records"].as_array().unwrap().len(), 12);
    assert!(parsed["conclusion"]["concentricity"].as_f64().unwrap() < 1e-6);
}

#[test]
fn hypothesis_failure_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "offset.json", OFFSET_SCENARIO);
    let report = dir.path().join("report.json");
    let code = conecheck::run([
        "conecheck",
        "check-theorem",
        &scenario,
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"verdict\": \"hypothesis-failed\""));
}

#[test]
fn conclusion_failure_exits_three() {
    // an absurd congruence tolerance lets every apex pass while the
    // offset surface still fails the symmetry certificates
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "offset.json", OFFSET_SCENARIO);
    let report = dir.path().join("report.json");
    let code = conecheck::run([
        "conecheck",
        "check-theorem",
        &scenario,
        "--tol-congruence",
        "10.0",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"verdict\": \"conclusion-failed\""));
}

#[test]
fn schema_violations_and_bad_input_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let misspelled = write(
        dir.path(),
        "bad.json",
        &BALL_SCENARIO.replace("\"grid_seed\"", "\"grid_sed\""),
    );
    assert_eq!(conecheck::run(["conecheck", "check-theorem", &misspelled]), 1);
    assert_eq!(conecheck::run(["conecheck", "check-theorem", "/nonexistent/x.json"]), 1);
    assert_eq!(conecheck::run(["conecheck", "not-a-subcommand"]), 1);
    // zero tolerance rejected before computation
    let zero_tol = write(
        dir.path(),
        "zero.json",
        &BALL_SCENARIO.replace(
            "\"sampling\"",
            "\"tolerances\": {\"congruence\": 0.0}, \"sampling\"",
        ),
    );
    assert_eq!(conecheck::run(["conecheck", "check-theorem", &zero_tol]), 1);
}

#[test]
fn sampling_overrides_apply() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);
    let report = dir.path().join("report.json");
    let code = conecheck::run([
        "conecheck",
        "check-theorem",
        &scenario,
        "--samples",
        "9",
        "--meridians",
        "24",
        "--seed",
        "11",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["records"].as_array().unwrap().len(), 9);
}

#[test]
fn graze_csv_has_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);
    let csv = dir.path().join("graze.csv");
    let code = conecheck::run([
        "conecheck",
        "graze",
        &scenario,
        "--apex",
        "2,0,0",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "azimuth,u1,u2,u3,k1,k2,k3");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 16);
    // unit ball from (2,0,0): every contact has k1 = 1/2
    for row in rows {
        let fields: Vec<f64> = row.split(',').skip(1).map(|v| v.parse().unwrap()).collect();
        assert!((fields[3] - 0.5).abs() < 1e-9, "row {row}");
    }
    // apex inside the body is a hard error
    assert_eq!(conecheck::run(["conecheck", "graze", &scenario, "--apex", "0.1,0,0"]), 1);
}

#[test]
fn partner_and_appendix_and_conjecture_reports() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);

    let partner = dir.path().join("partner.json");
    let code = conecheck::run([
        "conecheck",
        "partner",
        &scenario,
        "--apex",
        "3,0,0",
        "--out",
        partner.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&partner).unwrap()).unwrap();
    assert!(parsed["distance"].as_f64().unwrap() < 1e-8);
    assert!((parsed["partner"][0].as_f64().unwrap() + 3.0).abs() < 1e-6);

    let path_report = dir.path().join("path.json");
    let code = conecheck::run([
        "conecheck",
        "appendix-path",
        &scenario,
        "--from",
        "3,0,0",
        "--to",
        "0,3,0",
        "--out",
        path_report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path_report).unwrap()).unwrap();
    assert_eq!(parsed["t"].as_array().unwrap().len(), 33);
    assert_eq!(parsed["degenerate_zero"], serde_json::Value::Bool(true));

    let conj = dir.path().join("conjecture.json");
    let code = conecheck::run([
        "conecheck",
        "conjecture1",
        &scenario,
        "--directions",
        "6",
        "--out",
        conj.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&conj).unwrap()).unwrap();
    let records = parsed.as_array().unwrap();
    assert_eq!(records.len(), 6);
    for r in records {
        assert!((r["ratio"].as_f64().unwrap() + 1.0).abs() < 1e-6);
        assert!(r["chord_defect"].as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn isoptic_emits_polyline_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "egg.json", EGG_SCENARIO);
    let csv = dir.path().join("isoptic.csv");
    let output = binary()
        .args([
            "isoptic",
            &scenario,
            "--alpha",
            "1.5707963267948966",
            "--count",
            "64",
            "--out",
            csv.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!(report["angle_defect"].as_f64().unwrap() < 1e-6);
    assert!((report["asymmetry_defect"].as_f64().unwrap() - 0.2).abs() < 1e-9);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next().unwrap(), "theta,z1,z2");
    assert_eq!(text.lines().count(), 65);
    // angles outside (0, pi) are rejected
    assert_eq!(
        conecheck::run(["conecheck", "isoptic", &scenario, "--alpha", "0.0"]),
        1
    );
    // spatial bodies are not planar
    let dir2 = tempfile::tempdir().unwrap();
    let ball = write(dir2.path(), "ball.json", BALL_SCENARIO);
    assert_eq!(conecheck::run(["conecheck", "isoptic", &ball, "--alpha", "1.0"]), 1);
}

#[test]
fn selftest_passes_and_reports_forced_tolerance_failures() {
    let ok = binary().arg("selftest").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&ok.stdout);
    assert!(stdout.contains("ok   ball-graze-polar-plane"));
    assert!(stdout.contains("0 failed"));

    // a tolerance below the rounding floor of the congruence measurement
    // cannot pass on sampled data
    let forced = binary().args(["selftest", "--tol-congruence", "1e-17"]).output().unwrap();
    assert_eq!(forced.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&forced.stdout);
    assert!(stdout.contains("FAIL ball-in-sphere-verdict"));
}

#[test]
fn reports_are_deterministic_across_processes() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    for (out, threads) in [(&r1, "1"), (&r2, "4")] {
        let status = binary()
            .args(["check-theorem", &scenario, "--out", out.to_str().unwrap()])
            .env("CONECHECK_THREADS", threads)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    // thread count must never change results
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
}

#[test]
fn csv_dir_collects_apex_records() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write(dir.path(), "ball.json", BALL_SCENARIO);
    let csv_dir = dir.path().join("csv");
    let report = dir.path().join("report.json");
    let code = conecheck::run([
        "conecheck",
        "check-theorem",
        &scenario,
        "--out",
        report.to_str().unwrap(),
        "--csv-dir",
        csv_dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(csv_dir.join("apex_records.csv")).unwrap();
    assert!(text.starts_with("index,apex,partner,distance,ratio"));
    assert_eq!(text.lines().count(), 13);
}
