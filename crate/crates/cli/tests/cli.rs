use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adiageo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const GHO_EVAL: &[&str] = &[
    "eval", "--model", "gho", "--quantity", "metric", "--set", "Y=0,Z=1", "--sweep", "X=1:2:3", "--action", "1",
    "--side", "classical", "--format", "csv",
];

fn g11_at_x1(out: &str) -> f64 {
    let line = out.lines().find(|l| l.starts_with("1.0000000000000000e0,") && l.contains(",g,1,1,")).unwrap();
    line.rsplit(',').next().unwrap().parse().unwrap()
}

#[test]
fn classical_metric_sweep() {
    let o = run(GHO_EVAL);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("param:X,param:Y,param:Z,quantity,i,j,value"));
    assert_eq!(lines.count(), 3 * 6);
    assert_eq!(g11_at_x1(&out), 0.03125);
}

#[test]
fn quantum_level_one() {
    let mut args: Vec<&str> = GHO_EVAL.iter().map(|a| if *a == "classical" { "quantum" } else { a }).collect();
    args.extend(["--level", "1"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(g11_at_x1(&stdout(&o)), 0.09375);
}

#[test]
fn domain_violation_names_point() {
    let o = run(&["eval", "--model", "gho", "--quantity", "metric", "--sweep", "X=0.0:1:1", "--set", "Y=1,Z=1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("X=0") && err.contains("Y=1"), "{err}");
}

#[test]
fn usage_errors_exit_three() {
    for args in [
        &["eval", "--model", "nope", "--quantity", "metric", "--sweep", "X=1:2:2"][..],
        &["eval", "--model", "gho", "--quantity", "volume", "--sweep", "X=1:2:2"],
        &["eval", "--model", "gho", "--quantity", "metric", "--set", "Y=0,Z=1"],
        &["verify", "--suite", "nonsense"],
        &["series", "--target", "bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn verify_suites_pass() {
    for suite in ["gamma-beta", "quartic-series"] {
        let o = run(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0));
        let report = String::from_utf8_lossy(&o.stderr);
        assert!(report.lines().any(|l| l.starts_with("PASS")));
        assert!(!report.contains("FAIL"));
    }
}

#[test]
fn series_dump_entries_and_determinism() {
    let a = run(&["series", "--target", "W"]);
    let b = run(&["series", "--target", "W"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let w: Value = serde_json::from_slice(&a.stdout).unwrap();
    let found = w["W"].as_array().unwrap().iter().any(|e| {
        e["order"] == 1 && e["harmonic"] == 2 && e["trig"] == "sin" && e["num"] == 1 && e["den"] == 24
    });
    assert!(found, "W1 sin 2 entry missing");

    let m: Value = serde_json::from_slice(&run(&["series", "--target", "metric"]).stdout).unwrap();
    assert!(m["g11"].as_array().unwrap().iter().any(|e| e["order"] == 2 && e["num"] == 47 && e["den"] == 32768));
}

#[test]
fn json_rows_mirror_csv() {
    let mut args = GHO_EVAL[..GHO_EVAL.len() - 1].to_vec();
    args.push("json");
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let rows: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    assert_eq!(rows[0]["quantity"], "g");
    assert_eq!(rows[0]["param:X"], 1.0);
    assert_eq!(rows[0]["value"], 0.03125);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["eval", "--model", "gholin", "--quantity", "curvature", "--set", "W=0.3,Y=0.2,Z=1", "--sweep", "X=1:3:40"];
    let one = Command::new(env!("CARGO_BIN_EXE_adiageo")).args(args).env("ADIAGEO_THREADS", "1").output().unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_adiageo")).args(args).env("ADIAGEO_THREADS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_adiageo")).args(args).env("ADIAGEO_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
