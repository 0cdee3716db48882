//! End-to-end tests of the binary: exact output bytes, exit codes,
//! and stdin handling.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (String, String, Option<i32>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quasilap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn matrix_json_single_oriented_edge() {
    let (stdout, _, code) = run(&["matrix", "--kind", "q", "--format", "json"], "0 1 D\n");
    assert_eq!(code, Some(0));
    assert_eq!(
        stdout,
        "{\"rows\":2,\"cols\":2,\"entries\":[[[1,0],[0,1]],[[0,-1],[1,0]]]}\n"
    );
}

#[test]
fn matrix_text_is_aligned() {
    let (stdout, _, code) = run(&["matrix", "--kind", "l"], "0 1 D\n");
    assert_eq!(code, Some(0));
    assert_eq!(stdout, "1  -i\ni   1\n");
}

#[test]
fn minor_both_methods_on_k3() {
    let k3 = "0 1 U\n0 2 U\n1 2 U\n";
    let (stdout, _, code) = run(
        &["minor", "--rows", "0,1", "--cols", "0,1", "--matrix", "l", "--method", "both"],
        k3,
    );
    assert_eq!(code, Some(0));
    assert!(stdout.contains("direct        = 3"));
    assert!(stdout.contains("combinatorial = 3"));
}

#[test]
fn minor_json_reports_terms() {
    let (stdout, _, code) = run(
        &[
            "minor", "--rows", "0", "--cols", "1", "--matrix", "q", "--method", "both",
            "--format", "json",
        ],
        "0 1 D\n",
    );
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["direct"], serde_json::json!([0, 1]));
    assert_eq!(v["combinatorial"], serde_json::json!([0, 1]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    // the theorem's literal phase differs from the exact value here
    assert_eq!(v["terms"][0]["phase_literal"], serde_json::json!([0, -1]));
}

#[test]
fn cycles_classification_output() {
    let (stdout, _, code) = run(&["cycles"], "0 1 D\n1 2 D\n2 0 U\n");
    assert_eq!(code, Some(0));
    assert_eq!(stdout, "cycle 0-1-2: a=2 b=0 c=1 typeS=III typeT=IV\n1 cycle(s)\n");
}

#[test]
fn quapartite_json_on_directed_four_cycle() {
    let (stdout, _, code) = run(
        &["quapartite", "--format", "json"],
        "0 1 D\n1 2 D\n2 3 D\n3 0 D\n",
    );
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["quapartite"], serde_json::json!(true));
    assert_eq!(v["q_singular"], serde_json::json!(true));
    assert_eq!(v["partition"], serde_json::json!([["0"], ["1"], ["2"], ["3"]]));
}

#[test]
fn quapartite_text_reports_none() {
    let (stdout, _, code) = run(&["quapartite"], "0 1 D\n1 2 D\n2 0 D\n");
    assert_eq!(code, Some(0));
    assert!(stdout.starts_with("none\n"));
    assert!(stdout.contains("quapartite          = false"));
}

#[test]
fn spanning_trees_of_k4() {
    let k4 = "0 1 U\n0 2 U\n0 3 D\n1 2 D\n1 3 U\n2 3 U\n";
    let (stdout, _, code) = run(&["spanning-trees"], k4);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, "16\n");
}

#[test]
fn sss_lists_qualifying_substructures() {
    let (stdout, _, code) =
        run(&["sss", "--verts", "0,1,2", "--format", "json"], "0 1 D\n1 2 D\n2 0 D\n");
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["x"], serde_json::json!(1));
    assert_eq!(rows[0]["is_sss"], serde_json::json!(true));
}

#[test]
fn verify_ok_on_directed_four_cycle() {
    let (stdout, _, code) = run(&["verify"], "0 1 D\n1 2 D\n2 3 D\n3 0 D\n");
    assert_eq!(code, Some(0));
    assert!(stdout.contains("verify: ok"));
    assert!(stdout.contains("quapartite = true"));
}

#[test]
fn parse_error_exits_3() {
    let (_, stderr, code) = run(&["matrix", "--kind", "h"], "0 0 U\n");
    assert_eq!(code, Some(3));
    assert!(stderr.contains("self-loop"));
}

#[test]
fn unknown_kind_exits_3() {
    let (_, stderr, code) = run(&["matrix", "--kind", "h"], "0 1 X\n");
    assert_eq!(code, Some(3));
    assert!(stderr.contains("line 1"));
}

#[test]
fn usage_errors_exit_2() {
    // clap-level: bad flag value
    let (_, _, code) = run(&["matrix", "--kind", "z"], "");
    assert_eq!(code, Some(2));
    // unknown vertex label
    let (_, stderr, code) =
        run(&["minor", "--rows", "9", "--cols", "0", "--matrix", "l"], "0 1 U\n");
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown vertex label"));
    // missing input file
    let (_, _, code) = run(&["matrix", "--kind", "h", "--input", "/nonexistent/g.txt"], "");
    assert_eq!(code, Some(2));
}

#[test]
fn labels_are_interned_in_first_appearance_order() {
    let (stdout, _, code) = run(
        &["minor", "--rows", "a,b", "--cols", "a,b", "--matrix", "l"],
        "a b U\nb c U\na c U\n",
    );
    assert_eq!(code, Some(0));
    assert!(stdout.contains("direct        = 3"));
}

#[test]
fn output_is_deterministic() {
    let input = "0 1 D\n1 2 U\n2 3 D\n3 0 U\n0 2 D\n";
    let (first, _, _) = run(&["verify", "--format", "json"], input);
    for _ in 0..3 {
        let (again, _, _) = run(&["verify", "--format", "json"], input);
        assert_eq!(first, again);
    }
}
