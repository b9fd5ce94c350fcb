use std::process::Command;

use pseudomech::suite::{Report, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pseudomech"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn verify_writes_schema_conforming_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, stdout) = run(&["verify", "--model", "1d", "--suite", "all", "--json", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = raw.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "determinant_order", "model", "suite", "timestamp", "tolerances"]);
    let report: Report = serde_json::from_value(raw).unwrap();
    assert_eq!(report.determinant_order, "row-major");
    assert!(report.checks.len() >= 20);
    assert!(report.checks.iter().all(|c| c.max_abs_defect.is_some()));
    assert_eq!(code, report.exit_code());
    assert!(stdout.contains("1d all:"));
}

#[test]
fn json_is_deterministic_apart_from_timestamp() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("r{k}.json"));
        run(&["verify", "--model", "2d", "--suite", "integrals", "--json", path.to_str().unwrap()]);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timestamp");
        bodies.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--model", "pu1", "--suite", "all"]).0, 0);
    assert_eq!(run(&["verify", "--model", "nn3", "--suite", "integrals"]).0, 0);
    assert_eq!(run(&["verify", "--model", "5d", "--suite", "all"]).0, 2);
    assert_eq!(run(&["verify", "--model", "1d", "--suite", "quick"]).0, 2);
    assert_eq!(run(&["verify", "--model", "2d", "--suite", "nambu"]).0, 2);
    assert_eq!(run(&["bracket", "theta^2", "q", "--model", "1d", "--basis", "qp"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    // tolerance too strict for nothing: zero defects still pass
    assert_eq!(run(&["verify", "--model", "1d", "--suite", "canonical", "--tol", "1e-30"]).0, 0);
}

#[test]
fn indefinite_pu_from_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("pu.cfg");
    std::fs::write(&cfg, "# indefinite\nmu1 = 1\nmu2 = 1\nrho = 2\n").unwrap();
    let json = dir.path().join("r.json");
    let (code, _) = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "verify",
        "--model",
        "pu1",
        "--suite",
        "integrals",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.checks[0].status, Status::Error);
    assert!(report.checks[0].max_abs_defect.is_none());

    std::fs::write(&cfg, "speed = 3\n").unwrap();
    assert_eq!(run(&["--config", cfg.to_str().unwrap(), "integrals", "--model", "1d"]).0, 2);
}

#[test]
fn nn_integrals_suite_counts() {
    let (_, out) = run(&["verify", "--model", "nn3", "--suite", "integrals"]);
    let conserved = out.lines().filter(|l| l.starts_with("PASS") && l.contains("conserved: G")).count();
    assert_eq!(conserved, 36);
}

#[test]
fn bracket_and_evolve_commands() {
    assert_eq!(run(&["bracket", "q", "p", "--model", "1d", "--basis", "qp"]), (0, "1\n".into()));
    assert_eq!(run(&["bracket", "theta", "pi", "--model", "2d"]).0, 2);
    assert_eq!(run(&["bracket", "theta1", "pi1", "--model", "2d"]), (0, "1\n".into()));
    let (code, out) = run(&["evolve", "--model", "1d", "--t", "3.141592653589793", "--observable", "q", "--basis", "qp"]);
    assert_eq!((code, out.trim()), (0, "-q"));
    let (code, out) = run(&["nambu", "--model", "1d", "--f", "theta"]);
    assert_eq!(code, 0);
    assert!(out.contains("quotient      i*theta"), "{out}");
}
