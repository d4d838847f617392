//! Exit-code contract and output-format checks for the binary.

use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_rank-forge"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code(),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn malformed_word_exits_two() {
    let (code, _, stderr) = run(&["fg", "decide-sgen", "--rank", "2", "a?b"]);
    assert_eq!(code, Some(2));
    assert!(
        stderr.contains("a?b"),
        "stderr names the bad word: {stderr}"
    );
}

#[test]
fn out_of_rank_word_exits_two() {
    let (code, _, _) = run(&["fg", "decide-sgen", "--rank", "1", "ab"]);
    assert_eq!(code, Some(2));
}

#[test]
fn unknown_subcommand_exits_two() {
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, Some(2));
}

#[test]
fn malformed_group_syntax_exits_two() {
    let (code, _, stderr) = run(&["ab", "decide-sgen", "--group", "Q^2", "--elems", "1"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("Q^2"), "{stderr}");
}

#[test]
fn malformed_presentation_json_exits_two() {
    let path = std::env::temp_dir().join("rf-bad-presentation.json");
    std::fs::write(&path, "{not json").unwrap();
    let (code, _, stderr) = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("JSON"), "{stderr}");
}

#[test]
fn missing_file_exits_two() {
    let (code, _, _) = run(&["analyze", "/nonexistent/file.json"]);
    assert_eq!(code, Some(2));
}

#[test]
fn regress_passes_and_reports_counts() {
    let (code, stdout, _) = run(&["regress"]);
    assert_eq!(code, Some(0));
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["failed"], 0);
    assert!(report["total"].as_u64().unwrap() >= 10);
}

#[test]
fn snf_serializes_integers_as_decimal_strings() {
    let (code, stdout, _) = run(&["ab", "snf", "2,4;6,8"]);
    assert_eq!(code, Some(0));
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["diagonal"], serde_json::json!(["2", "4"]));
    assert!(report["u"][0][0].is_string());
}

#[test]
fn certificate_entries_are_decimal_strings() {
    let (code, stdout, _) = run(&["ab", "decide-sgen", "--group", "Z", "--elems", "2;-3"]);
    assert_eq!(code, Some(0));
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["certificate"], serde_json::json!(["3", "2"]));
}

#[test]
fn pretty_output_is_not_json() {
    let (code, stdout, _) = run(&[
        "--pretty",
        "ab",
        "rank",
        "--free-rank",
        "1",
        "--factors",
        "2",
    ]);
    assert_eq!(code, Some(0));
    assert!(serde_json::from_str::<Value>(&stdout).is_err());
    assert!(stdout.contains("semigroup_rank: 2"), "{stdout}");
}

#[test]
fn examples_lists_every_fixture() {
    let (code, stdout, _) = run(&["examples"]);
    assert_eq!(code, Some(0));
    let report: Value = serde_json::from_str(&stdout).unwrap();
    let ids: Vec<&str> = report["examples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["id"].as_str().unwrap())
        .collect();
    assert!(
        ids.contains(&"int-basis")
            && ids.contains(&"klein-bottle")
            && ids.contains(&"nilpotent-witness")
    );
}

#[test]
fn surface_rejects_non_orientable_sphere() {
    let (code, _, _) = run(&["surface", "--genus", "0", "--non-orientable"]);
    assert_eq!(code, Some(2));
}

#[test]
fn witness_torsion_rejects_order_one() {
    let (code, _, _) = run(&[
        "witness", "torsion", "--n", "2", "--index", "0", "--order", "1",
    ]);
    assert_eq!(code, Some(2));
}
