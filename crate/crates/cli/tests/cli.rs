use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pigrowth")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn codim_csv() {
    let o = run(&["codim", "--algebra", "C3:g", "--group", "Z4:1", "--n", "0..4", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1,3,6,10,15");
}

#[test]
fn cochar_json() {
    let o = run(&["cochar", "--algebra", "U3:1", "--group", "Z1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn varieties_exit_codes() {
    assert_eq!(run(&["contains", "--a", "U3:1", "--b", "C2:1", "--group", "Z2"]).status.code(), Some(0));
    let o = run(&["equiv", "--a", "C3star:0", "--b", "U3:0", "--group", "Z1", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT EQUIVALENT"));
}

#[test]
fn tideal_by_group_order() {
    let gens = ["--gen", "x1^-_e", "--gen", "x1^+_g", "--gen", "x1^+_g2", "--bind", "g2=2"];
    let mut ok = vec!["verify-tideal", "--algebra", "G2tau:g,g", "--group", "Z5:1"];
    ok.extend(gens);
    assert_eq!(run(&ok).status.code(), Some(0));
    let mut bad = vec!["verify-tideal", "--algebra", "G2tau:g,g", "--group", "Z4:1"];
    bad.extend(gens);
    let o = run(&bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(2_{2-})"));
}

#[test]
fn usage_errors() {
    for args in [
        &["codim", "--algebra", "X9:1", "--group", "Z2"][..],
        &["codim", "--algebra", "C3:g", "--group", "Z4:1", "--n", "0..99"],
        &["codim", "--algebra", "C3:g", "--group", "Z4"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn verify_paper_scope_is_deterministic() {
    let a = run(&["verify-paper", "--scope", "table3", "--format", "json"]);
    let b = run(&["--sequential", "verify-paper", "--scope", "table3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn injected_fault_is_reported() {
    let o = run(&["verify-paper", "--scope", "lemma3.5", "--inject-fault", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["summary"]["fail"].as_u64().unwrap() > 0);
}
