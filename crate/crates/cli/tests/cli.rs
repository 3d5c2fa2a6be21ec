use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negabeta")).args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json")
}

#[test]
fn expand_five_halves() {
    let v = json(&["--beta", "5/2", "expand", "--digits", "10"]);
    assert_eq!(v["schema"], 1);
    assert!(v["digits"].as_str().unwrap().starts_with("2 1 1 0"));
    assert_eq!(v["status"], "aperiodic");
}

#[test]
fn expand_rational_point_csv() {
    let out = run(&["--beta", "2", "--format", "csv", "expand", "--x", "-2/3", "--digits", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "index,digit\n1,2\n2,2\n3,2\n");
}

#[test]
fn verify_golden_is_zero() {
    let v = json(&["--beta", "golden", "--order", "16", "--length", "16", "verify"]);
    assert_eq!(v["all_zero"], true);
    assert_eq!(v["certified_order"], 16);
}

#[test]
fn plot_has_one_line_per_lap() {
    let out = run(&["--beta", "5/2", "--format", "svg", "plot", "--iterate", "3"]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches(r#"class="lap""#).count(), 20);
}

#[test]
fn output_is_deterministic() {
    let args = ["--beta", "13/10", "--length", "8", "codes"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn zeta_series_are_strings() {
    let v = json(&["--beta", "golden", "--order", "6", "zeta"]);
    let z: Vec<&str> = v["zeta"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(z, ["1", "2", "3", "5", "8", "13", "21"]);
}

#[test]
fn periodic_points_of_two() {
    let v = json(&["--beta", "2", "--length", "5", "periodic-points", "--target", "shift"]);
    assert_eq!(v["counts"], serde_json::json!(["3", "5", "9", "17", "33"]));
}

#[test]
fn complexity_recurrence_matches_census() {
    let v = json(&["--beta", "5/2", "--length", "6", "complexity"]);
    assert_eq!(v["recurrence"], v["census"]);
}

#[test]
fn gaps_of_three_halves() {
    let v = json(&["--beta", "3/2", "gaps"]);
    assert_eq!(v["level"], 0);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 1);
}

#[test]
fn bad_inputs_exit_one() {
    assert_eq!(run(&["--beta", "1/2", "classify"]).status.code(), Some(1));
    assert_eq!(run(&["--beta", "nope", "classify"]).status.code(), Some(1));
    assert_eq!(run(&["--beta", "2", "gaps"]).status.code(), Some(1));
    assert_eq!(run(&["--beta", "2", "--horizon", "8", "--order", "16", "zeta"]).status.code(), Some(1));
}

#[test]
fn horizon_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_negabeta"))
        .env("NEGABETA_MAX_HORIZON", "10")
        .args(["--beta", "2", "--order", "16", "zeta"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn undecided_tail_exits_two_with_output() {
    let args = ["--beta", "root:1,0,-5@2:3", "--horizon", "40", "--order", "40"];
    let out = run(&[&args[..], &["classify"]].concat());
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "unknown_at_horizon");
    let out = run(&[&args[..], &["zeta"]].concat());
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[&args[..], &["zeta", "--assume-nonperiodic"]].concat());
    assert_eq!(out.status.code(), Some(0));
}
