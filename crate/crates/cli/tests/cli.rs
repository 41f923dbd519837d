use std::process::{Command, Output};

fn hfrac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfrac"))
        .args(args)
        .env_remove("HFRAC_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn euler_numbers() {
    let o = hfrac(&["euler", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 1 2 5 16 61 272 1385 7936\n");
}

#[test]
fn euler_json() {
    let o = hfrac(&["euler", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["name"], "euler");
    assert_eq!(v["values"], serde_json::json!(["1", "1", "1", "2", "5"]));
}

#[test]
fn hankel_of_euler_numbers() {
    let o = hfrac(&["hankel", "--series", "euler", "--max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 0 -1 -9\n");
}

#[test]
fn hankel_of_explicit_coefficients() {
    // Catalan numbers: every determinant is 1.
    let o = hfrac(&["hankel", "--coeffs", "1,1,2,5,14,42,132", "--max", "4"]);
    assert_eq!(stdout(&o), "1 1 1 1 1\n");
    let o = hfrac(&["hankel", "--coeffs", "1,2", "--max", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--coeffs"));
}

#[test]
fn q_euler() {
    let o = hfrac(&["qeuler", "--n", "9", "--q", "0"]);
    assert_eq!(stdout(&o), "1 1 1 2 4 9 21 51 127 323\n");
    let o = hfrac(&["qeuler", "--n", "9", "--q", "1"]);
    assert_eq!(stdout(&o), "1 1 1 2 5 16 61 272 1385 7936\n");
    let o = hfrac(&["qeuler", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn perm_stats() {
    let o = hfrac(&["perm-stats", "--n", "6", "--weight", "W2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "61\n");
    let o = hfrac(&["perm-stats", "--n", "4", "--weight", "W9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--weight"));
}

#[test]
fn hfrac_expansion_of_euler_numbers() {
    let o = hfrac(&["hfrac", "--series", "euler", "--order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("delta 2, class H"));
    assert_eq!(lines.next().unwrap(), "1: v = 1, k = 0, u = -1");
    assert_eq!(lines.next().unwrap(), "2: v = 1, k = 1, u = -2 - 4x");
}

#[test]
fn verify_one_id() {
    let o = hfrac(&["verify", "--id", "Thm1.1", "--order", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS Thm1.1"));
    let o = hfrac(&["verify", "--id", "F1", "--r", "3", "--order", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS F1[r=3]"));
}

#[test]
fn verify_json_schema() {
    let o = hfrac(&["verify", "--id", "H9", "--n-max", "8", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v[0];
    assert_eq!(r["id"], "H9");
    assert_eq!(r["status"], "PASS");
    assert!(r["first_mismatch"].is_null());
    assert!(r["elapsed_ms"].is_u64());
}

#[test]
fn verify_with_seed_adds_random_points() {
    let o = hfrac(&["verify", "--id", "H7", "--seed", "3", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Thm4.1[seed=3#4]"), "{out}");
    assert!(out.contains("Thm6.2[seed=3#0]"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify", "--id", "F99"],
        vec!["verify"],
        vec!["verify", "--id", "F7", "--r", "2"],
        vec!["euler", "--n", "-1"],
        vec!["frobnicate"],
    ] {
        let o = hfrac(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn order_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_hfrac"))
        .args(["euler", "--n", "20"])
        .env("HFRAC_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--n 20"));
}

#[test]
fn output_is_deterministic() {
    let args = ["hfrac", "--series", "tan", "--order", "16", "--json"];
    assert_eq!(hfrac(&args).stdout, hfrac(&args).stdout);
}

#[test]
fn help_exits_0() {
    let o = hfrac(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
