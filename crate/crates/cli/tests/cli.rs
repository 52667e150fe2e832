use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bcdaha"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const CASE_A: &str =
    r#"{"p": 1, "q": 2, "n": 1, "mu": "0", "nvec": [-1], "xi": [0], "nu": ["3/5"]}"#;
const RANK_TWO: &str =
    r#"{"p": 1, "q": 2, "n": 2, "mu": "0", "nvec": [-1], "xi": [-1], "nu": ["3/5"]}"#;
const INADMISSIBLE: &str =
    r#"{"p": 1, "q": 2, "n": 1, "mu": "0", "nvec": [1], "xi": [0], "nu": ["3/5"]}"#;

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON on stdout")
}

#[test]
fn case_a_passes_with_oracle() {
    let f = write_tmp("case_a.json", CASE_A);
    let o = run(&["verify", "--oracle", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("predicted 2, tensor model 2"));
    assert!(out.contains("relations: all hold"));
    assert!(out.contains("isomorphic to the induced module: true"));
}

#[test]
fn closed_forms_without_oracle() {
    let f = write_tmp("case_a_plain.json", CASE_A);
    let o = run(&["--json", "verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["results"]["predicted_dim"], 2);
    assert_eq!(v["results"]["eigenvalues"][0][0], "3/10");
    assert_eq!(v["status"], "pass");
}

#[test]
fn check_params_reports_derived_values() {
    let f = write_tmp("check_a.json", CASE_A);
    let o = run(&["--json", "check-params", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["results"]["admissible"], true);
    assert_eq!(v["results"]["derived"]["kappa1"], "-1/2");
    assert_eq!(v["results"]["predicted_dim"], 2);
}

#[test]
fn malformed_input_exits_1() {
    let f = write_tmp("broken.json", r#"{"p": 1, "q": "#);
    assert_eq!(
        run(&["check-params", f.to_str().unwrap()]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["verify", f.to_str().unwrap()]).status.code(), Some(1));
    let missing = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("does_not_exist.json");
    assert_eq!(
        run(&["check-params", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    let short_nu = write_tmp(
        "short_nu.json",
        r#"{"p": 1, "q": 2, "n": 1, "mu": "0", "nvec": [-1], "xi": [0], "nu": []}"#,
    );
    assert_eq!(
        run(&["check-params", short_nu.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn inadmissible_exits_2_with_violations() {
    let f = write_tmp("inadmissible.json", INADMISSIBLE);
    let o = run(&["--json", "check-params", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v = json_of(&o);
    assert_eq!(v["results"]["admissible"], false);
    assert!(!v["results"]["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["status"], "fail");
    assert_eq!(
        run(&["verify", "--oracle", f.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn guardrail_exits_3() {
    let f = write_tmp("rank_two.json", RANK_TWO);
    let o = run(&[
        "--json",
        "verify",
        "--oracle",
        "--max-dim",
        "4",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_of(&o)["status"], "guardrail");
    let o = run(&["verify", "--oracle", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn grid_of_points() {
    let grid = format!("[{}, {}]", CASE_A, RANK_TWO);
    let f = write_tmp("grid.json", &grid);
    let o = run(&[
        "--json",
        "verify",
        "--oracle",
        "--grid",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["results"].as_array().unwrap().len(), 2);
    let mixed = write_tmp(
        "mixed_grid.json",
        &format!("[{}, {}]", CASE_A, INADMISSIBLE),
    );
    let o = run(&["--json", "verify", "--grid", mixed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v = json_of(&o);
    assert!(v["discrepancies"][0]
        .as_str()
        .unwrap()
        .starts_with("point 2"));
}

#[test]
fn central_case_two_symbolic() {
    let o = run(&[
        "--json",
        "central",
        "--p",
        "1",
        "--q",
        "2",
        "--case",
        "2",
        "--symbolic",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    // ((1 + 3μ)/2)²
    assert_eq!(v["results"]["y1_squared"], "9/4*mu^2 + 3/2*mu + 1/4");
    assert_eq!(v["results"]["identity_holds"], true);
    assert_eq!(v["results"]["printed_constant_term_holds"], false);
}

#[test]
fn central_case_one_at_point() {
    let o = run(&[
        "--json",
        "central",
        "--p",
        "1",
        "--q",
        "2",
        "--case",
        "1",
        "--at",
        "mu=0,tau=1,nu1=3/5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["results"]["at"]["y1_squared"], "9/100");
    let o = run(&[
        "central", "--p", "1", "--q", "2", "--case", "1", "--at", "mu=0",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn central_equal_ranks_and_bad_shapes() {
    let o = run(&["--json", "central", "--p", "2", "--q", "2", "--case", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["results"]["formula"], "p = q formula");
    assert_eq!(
        run(&["central", "--p", "3", "--q", "2", "--case", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["central", "--p", "1", "--q", "2", "--case", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_round_trips_byte_identical() {
    let f = write_tmp("round_trip.json", RANK_TWO);
    for args in [
        vec!["--json", "verify", "--oracle", f.to_str().unwrap()],
        vec!["--json", "check-params", f.to_str().unwrap()],
        vec!["--json", "central", "--p", "1", "--q", "3", "--case", "2"],
    ] {
        let o = run(&args);
        let text = stdout(&o);
        let v: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(text, again);
        for key in [
            "command",
            "params",
            "results",
            "timing_ms",
            "discrepancies",
            "status",
        ] {
            assert!(v.get(key).is_some(), "missing {}", key);
        }
        assert!(v["timing_ms"].is_u64());
    }
}

#[test]
fn params_json_round_trips_through_report() {
    let f = write_tmp("params_echo.json", CASE_A);
    let v = json_of(&run(&["--json", "check-params", f.to_str().unwrap()]));
    let original: Value = serde_json::from_str(CASE_A).unwrap();
    assert_eq!(v["params"], original);
}

#[test]
fn selftest_detects_injected_kappa_flip() {
    let o = run(&["--json", "selftest", "--inject-kappa-flip"]);
    assert_ne!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["status"], "fail");
    let disc: Vec<&str> = v["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_str().unwrap())
        .collect();
    assert!(disc.iter().any(|d| d.contains("relation")), "{:?}", disc);
}
