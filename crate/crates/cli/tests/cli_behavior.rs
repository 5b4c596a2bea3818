//! Front-end behavior: exit codes, determinism, format switches.

use std::process::Command;

fn finq() -> Command {
    Command::new(env!("CARGO_BIN_EXE_finq"))
}

fn strip_timing(s: &str) -> String {
    s.lines()
        .filter(|l| !l.trim_start().starts_with("\"timing_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = finq().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_required_flag_exits_two() {
    let out = finq().args(["palev", "rotaton"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_parameter_value_exits_one() {
    let out = finq()
        .args(["palev", "rotaton", "--l", "1/3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    for args in [
        vec!["qset", "table", "--rank", "3"],
        vec!["qset", "signature", "--rank", "2"],
        vec!["lie", "killing", "--name", "so(3,3)"],
        vec!["spacetime", "feynman", "--n", "2", "--mu", "1"],
        vec!["verify-all", "--max-rank", "2", "--max-n", "2"],
    ] {
        let a = finq().args(&args).output().unwrap();
        let b = finq().args(&args).output().unwrap();
        assert_eq!(
            strip_timing(&String::from_utf8_lossy(&a.stdout)),
            strip_timing(&String::from_utf8_lossy(&b.stdout)),
            "non-deterministic output for {args:?}"
        );
    }
}

#[test]
fn table_rank_two_lists_serials_two_three() {
    let out = finq().args(["qset", "table", "--rank", "2"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["results"]["table"].as_array().unwrap();
    let last = rows.last().unwrap();
    assert_eq!(last["serials"], serde_json::json!([2, 3]));
    assert_eq!(last["sets"], serde_json::json!(["{{∅}}", "{{∅},∅}"]));
}

#[test]
fn feynman_csv_shape() {
    let out = finq()
        .args([
            "--format",
            "csv",
            "spacetime",
            "feynman",
            "--n",
            "2",
            "--mu",
            "1",
            "--chrone",
            "1/2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "value,multiplicity");
    assert_eq!(lines[1..], ["-1,4", "0,8", "1,4"]);
}

#[test]
fn text_format_prints_checks() {
    let out = finq()
        .args(["--format", "text", "lie", "jacobi", "--name", "hp(4)"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS jacobi-identity-exact"));
}

#[test]
fn check_failure_exits_one_with_witness() {
    // A rank too large for the table is reported as a failed check.
    let out = finq().args(["qset", "table", "--rank", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["pass"] == serde_json::json!(false)
        && !c["witness"].is_null()));
}

#[test]
fn seed_is_echoed_and_respected() {
    let a = finq()
        .args(["--seed", "7", "verify-all", "--max-rank", "1", "--max-n", "1"])
        .output()
        .unwrap();
    assert!(a.status.success());
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["params"]["seed"], serde_json::json!(7));
}
