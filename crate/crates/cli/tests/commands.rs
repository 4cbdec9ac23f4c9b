use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cli")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s.trim()).expect("json")
}

#[test]
fn classify_examples() {
    let (code, s) = run(&["classify", "su(1,2)", "1,0,-1"]);
    assert_eq!(code, 0);
    assert_eq!(json(&s)["in_table"], true);
    let (_, s) = run(&["classify", "sp2(1,1)", "1,1", "--oracle"]);
    let v = json(&s);
    assert_eq!(v["in_table"], false);
    assert_eq!(v["failed_condition"], "λ_2 ∈ 2Z");
    assert_eq!(v["dim_oracle"], 0);
    let (_, s) = run(&["classify", "so(0,9)", "0,0,0,0"]);
    assert_eq!(json(&s)["in_table"], true);
}

#[test]
fn classify_rejects_bad_tokens() {
    let out = Command::new(env!("CARGO_BIN_EXE_cli")).args(["classify", "su(1,2)", "1,q,-1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1,q,-1"));
}

#[test]
fn enumerate_examples() {
    let (_, s) = run(&["enumerate", "--type", "B2", "--shape", "2", "--null", "--format", "text"]);
    assert_eq!(s, "[2] [2\u{304}]\n");
    let (_, s) = run(&["enumerate", "--type", "A", "--n", "3", "--shape", "2,2,2", "--balanced", "--theta", "1,2"]);
    assert_eq!(s, "[[1,1],[2,2],[3,3]]\n");
    let (_, s) = run(&["enumerate", "--type", "D3", "--shape", "0"]);
    assert_eq!(s.lines().count(), 1);
}

#[test]
fn enumeration_is_deterministic() {
    let args = ["enumerate", "--type", "C3", "--shape", "2,2", "--null"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn verify_examples() {
    let (code, s) = run(&["verify", "families", "--kmax", "4"]);
    assert_eq!(code, 0, "{s}");
    assert_eq!(json(&s)["passed"], true);
    let (code, _) = run(&["verify", "character", "--type", "B2", "--lmax", "3"]);
    assert_eq!(code, 0);
    let (code, s) = run(&["verify", "primitive-basis", "--type", "F4", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(s.contains("4 elements"), "{s}");
}

#[test]
fn character_and_basis() {
    let (_, s) = run(&["character", "--type", "B2", "--lambda", "1,0"]);
    let v = json(&s);
    assert_eq!(v.as_array().map(|a| a.len()), Some(5));
    let (_, o) = run(&["character", "--type", "B2", "--lambda", "1,0", "--oracle"]);
    assert_eq!(s, o);
    let (_, s) = run(&["primitive-basis", "--type", "E6"]);
    assert_eq!(json(&s)["count"], 14);
    let (_, s) = run(&["invariant-dim", "--form", "EIII", "--lambda", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", "--oracle"]);
    assert_eq!(json(&s)["dim_oracle"], 3);
}
