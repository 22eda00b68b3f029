use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hikita-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sl2_text_passes() {
    let o = run(&["--family", "A", "--rank", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hikita_match: PASS"));
}

#[test]
fn single_report_json() {
    let o = run(&["--family", "D", "--rank", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["projected_rank"], 10);
    assert_eq!(v["hikita_match"], true);
}

#[test]
fn all_json_has_reports_array() {
    let o = run(&["--all", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn explicit_cartan_pairs_mode() {
    let o = run(&[
        "--family",
        "E",
        "--rank",
        "6",
        "--mode",
        "cartan-pairs",
        "--max-degree",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cartan-pairs"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["--family", "A", "--rank", "1", "--format", "yaml"][..],
        &["--family", "B", "--rank", "2"],
        &["--family", "E", "--rank", "9"],
        &["--family", "D", "--rank", "3"],
        &["--family", "A", "--rank", "2", "--max-degree", "1"],
        &["--family", "A", "--rank", "2", "--mode", "fast"],
        &["--rank", "2"],
        &["--all", "3", "--family", "A"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
