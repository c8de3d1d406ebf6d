use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(args)
        .env_remove("QAFFINE_CONFIG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn config_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("qaffine-cli-{}-{name}.cfg", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn text_output_with_evaluations() {
    let o = qaffine(&["eps", "--n", "1", "--k", "5", "--eval", "u=2", "--eval", "q=inf"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2u^2 - u\t[u=2: 6]\t[q=inf: 0]");
}

#[test]
fn json_poly_with_rational_evaluation() {
    let o = qaffine(&["pqn", "--n", "24", "--k", "1", "--eval", "u=1/2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["poly"]["coeffs"], serde_json::json!(["24", "-24"]));
    assert_eq!(v["eval"]["u=1/2"], "12");
}

#[test]
fn tsv_rows_are_coordinates_then_coefficients() {
    let o = qaffine(&["hpoly", "--type", "A1~1", "--delta-cap", "1", "--height-cap", "2", "--format", "tsv"]);
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect();
    assert_eq!(rows[0], ["0", "0", "1"]);
    assert!(rows.contains(&vec!["1".into(), "1".into(), "0".into(), "-1".into(), "1".into()]));
}

#[test]
fn json_series_keeps_config_first_and_evaluates() {
    let o = qaffine(&[
        "hpoly", "--type", "A1~1", "--delta-cap", "1", "--height-cap", "2", "--format", "json", "--eval", "q=1",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with(r#"{"config":{"type":"A1~1","delta_cap":1"#));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "h-poly");
    assert_eq!(v["terms"]["(0,1)"]["coeffs"], serde_json::json!(["0", "-1"]));
    assert_eq!(v["eval"]["q=1"]["(1,1)"], "0");
}

#[test]
fn config_file_then_flags() {
    let path = config_file("flags", "# small A2\ntype = A2~1\ndelta_cap = 1\nheight_cap = 2\nformat = json\n");
    let p = path.to_str().unwrap();

    let o = qaffine(&["--config", p, "gk"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["type"], "A2~1");
    assert_eq!(v["terms"]["(0,0,1)"]["coeffs"], serde_json::json!(["1", "-1"]));

    let o = qaffine(&["--config", p, "gk", "--format", "text", "--delta-cap", "0", "--height-cap", "1"]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    // α₀ has δ-degree 1 and falls outside the box
    assert_eq!(lines, ["(0,0,0)\t1", "(0,0,1)\t-u + 1", "(0,1,0)\t-u + 1"]);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn config_from_environment() {
    let path = config_file("env", "type = A1~1\nformat = tsv\n");
    let o = Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(["verify", "carlitz", "--bound", "3"])
        .env("QAFFINE_CONFIG", &path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), "id\tstatus\tcomparisons\tfirst_failure\ncarlitz\tPASS\t30\t\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn kostant_count_at_a_grade() {
    let o = qaffine(&["kostant", "--which", "k", "--beta", "1,1"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["gk", "--type", "X9~1"],
        &["hpoly", "--type", "A1~1", "--lambda", "1,2,3"],
        &["eps", "--n", "1", "--k", "2", "--eval", "u=1/0"],
        &["tau", "--k", "0"],
        &["--config", "/nonexistent/qaffine.cfg", "tau", "--k", "2"],
    ] {
        let o = qaffine(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let bad = config_file("bad", "colour = blue\n");
    let o = qaffine(&["--config", bad.to_str().unwrap(), "tau", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(bad).unwrap();
}

#[test]
fn unstabilized_specialization_exits_one() {
    let o = qaffine(&["specialize", "--type", "A2~1", "--delta-cap", "2", "--height-cap", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qaffine(&["specialize", "--type", "A2~1", "--delta-cap", "1", "--height-cap", "4", "--adaptive"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn large_types_need_opting_in() {
    let o = qaffine(&["verify", "basic-specialization", "--type", "A4~1", "--delta-cap", "1", "--height-cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SKIP basic-specialization"));
    let o = qaffine(&["specialize", "--type", "A4~1", "--delta-cap", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
