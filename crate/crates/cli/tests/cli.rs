use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyck-odd"))
        .args(args)
        .env_remove("DYCK_ODD_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).expect("well-formed json")
}

fn coefficients(v: &Value) -> Vec<String> {
    v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn enumerate_complete_odd_all() {
    let o = run(&[
        "enumerate",
        "--class",
        "odd-all",
        "--complete",
        "--n",
        "22",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let counts: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(
        counts,
        ["1", "1", "2", "5", "12", "30", "79", "213", "584", "1628", "4600"]
    );
}

#[test]
fn enumerate_complete_bonus_json() {
    let v = json(&[
        "enumerate",
        "--class",
        "bonus",
        "--complete",
        "--n",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(v["variable"], "Z");
    assert_eq!(v["valuation"], 1);
    assert_eq!(v["precision"], 4);
    assert_eq!(coefficients(&v), ["1", "2", "5"]);
}

#[test]
fn enumerate_empty_table() {
    let v = json(&[
        "enumerate",
        "--class",
        "odd-all",
        "--n",
        "0",
        "--format",
        "json",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["n"], 0);
    assert_eq!(rows[0]["layer"], "F");
    assert_eq!(rows[0]["height"], 0);
    assert_eq!(rows[0]["count"], "1");
}

#[test]
fn enumerate_table_has_header() {
    let o = run(&[
        "enumerate",
        "--class",
        "odd-last-even",
        "--n",
        "4",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("n,layer,height,count"));
    assert!(out.lines().any(|l| l == "4,H,0,1"));
}

#[test]
fn expand_v1() {
    let v = json(&[
        "expand",
        "--target",
        "v1",
        "--precision",
        "24",
        "--format",
        "json",
    ]);
    assert_eq!(v["variable"], "z");
    assert_eq!(v["valuation"], -1);
    assert_eq!(v["precision"], 24);
    let c = coefficients(&v);
    let odd: Vec<&str> = c.iter().step_by(2).map(String::as_str).collect();
    assert_eq!(
        odd,
        ["1", "-1", "0", "-1", "-2", "-4", "-10", "-26", "-68", "-183", "-504", "-1408", "-3982"]
    );
    let table = stdout(&run(&["expand", "--target", "v1", "--precision", "8"]));
    assert!(table.contains("1/z - z - z^5 - 2z^7 + O(z^8)"), "{table}");
}

#[test]
fn expand_h0_in_big_z() {
    let v = json(&[
        "expand",
        "--target",
        "h0",
        "--precision",
        "24",
        "--format",
        "json",
    ]);
    assert_eq!(v["variable"], "Z");
    assert_eq!(v["valuation"], 2);
    assert_eq!(
        coefficients(&v),
        ["1", "2", "4", "10", "26", "68", "183", "504", "1408", "3982"]
    );
}

#[test]
fn expand_f0_is_one() {
    let v = json(&[
        "expand",
        "--target",
        "fj",
        "--j",
        "0",
        "--precision",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(v["valuation"], 0);
    assert_eq!(coefficients(&v)[0], "1");
    assert!(coefficients(&v)[1..].iter().all(|c| c == "0"));
}

#[test]
fn expand_usage_errors() {
    assert_eq!(run(&["expand", "--target", "fj"]).status.code(), Some(2));
    assert_eq!(
        run(&["expand", "--target", "g0", "--j", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["expand", "--target", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--class", "even", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn expand_non_convergence_exit_code() {
    let o = run(&["expand", "--target", "v1", "--max-newton-iterations", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--suite", "all", "--n", "22"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let v = json(&["verify", "--suite", "identities", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_triple_agreement_covers_every_class() {
    let v = json(&[
        "verify",
        "--suite",
        "triple-agreement",
        "--n",
        "22",
        "--format",
        "json",
    ]);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for class in ["odd-all", "odd-last-even", "odd-last-any", "bonus"] {
        assert!(names.contains(&format!("{class}: automaton = oracle").as_str()));
        assert!(names.contains(&format!("{class}: automaton = closed form").as_str()));
    }
}

#[test]
fn verify_detects_injected_fault() {
    let o = run(&["verify", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_rejects_n_beyond_cap() {
    assert_eq!(
        run(&["verify", "--suite", "triple-agreement", "--n", "40"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn oeis_agreement() {
    let o = run(&[
        "oeis", "--id", "A143017", "--target", "g0h0", "--count", "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all equal"));
    let o = run(&["oeis", "--id", "A113337", "--target", "h0", "--count", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["oeis", "--id", "A101785", "--target", "g0", "--count", "30"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn oeis_wrong_pairing() {
    let o = run(&["oeis", "--id", "A101785", "--target", "h0", "--count", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("first mismatch at index 1"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn oeis_unknown_sequence() {
    assert_eq!(
        run(&["oeis", "--id", "A000045", "--target", "g0"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["oeis", "--id", "X000001", "--target", "g0"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn oeis_fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b101785.txt"), "1 1\n2 1\n3 2\n4 6\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_dyck-odd"))
        .args(["oeis", "--id", "A101785", "--target", "g0", "--count", "4"])
        .env("DYCK_ODD_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch at index 4"));
}

#[test]
fn deterministic_output() {
    let a = run(&[
        "enumerate",
        "--class",
        "bonus",
        "--n",
        "12",
        "--format",
        "json",
    ]);
    let b = run(&[
        "enumerate",
        "--class",
        "bonus",
        "--n",
        "12",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let help = stdout(&run(&["--help"]));
    assert!(help.contains("deterministic"));
}
