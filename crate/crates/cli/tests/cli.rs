use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfscope(dir: &Path, args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfscope"));
    cmd.current_dir(dir).args(args);
    match threads {
        Some(t) => cmd.env("HOPFSCOPE_THREADS", t.to_string()),
        None => cmd.env_remove("HOPFSCOPE_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("invalid report ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr))
    })
}

fn run_ok(dir: &Path, args: &[&str]) -> Value {
    let out = hopfscope(dir, args, None);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    report(&out)
}

#[test]
fn example_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_ok(dir.path(), &["example", "--name", "case-ii", "--n", "2", "--emit", "h.json"]);
    assert_eq!(r["tool"], "hopfscope");
    assert_eq!(r["command"], "example");
    assert_eq!(r["result"]["dim"], 8);
    let v = run_ok(dir.path(), &["verify", "--level", "hopf", "h.json"]);
    assert_eq!(v["result"]["all_pass"], true);
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn rep_type_of_h8_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "h8", "--emit", "h8.json"]);
    let r = run_ok(dir.path(), &["rep-type", "h8.json", "--dot", "q.dot"]);
    assert_eq!(r["result"]["kind"], "TameCandidate(ii)");
    assert_eq!(r["result"]["evidence"]["into_unit"], 1);
    assert_eq!(r["result"]["evidence"]["separated_consistent"], true);
    let dot = std::fs::read_to_string(dir.path().join("q.dot")).unwrap();
    assert!(dot.contains("digraph link_quiver"));
    assert!(dot.contains("(4)\""));
    assert!(dot.contains("C'"));
}

#[test]
fn corrupted_input_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "case-ii", "--n", "2", "--emit", "h.json"]);
    let mut h: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("h.json")).unwrap()).unwrap();
    // g·g = 1; make it 2
    let mult = h["mult"].as_array_mut().unwrap();
    let entry = mult.iter_mut().find(|e| e[0] == 1 && e[1] == 1).unwrap();
    entry[3] = serde_json::json!({"n": 1, "terms": [[0, "2"]]});
    std::fs::write(dir.path().join("bad.json"), h.to_string()).unwrap();
    let out = hopfscope(dir.path(), &["verify", "--level", "hopf", "bad.json"], None);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["all_pass"], false);
    let checks = r["result"]["report"]["checks"].as_array().unwrap();
    let failed: Vec<&Value> = checks.iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_array()));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopfscope(dir.path(), &["verify", "missing.json"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    std::fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    assert_eq!(hopfscope(dir.path(), &["verify", "junk.json"], None).status.code(), Some(2));
    assert_eq!(hopfscope(dir.path(), &["example", "--name", "nope"], None).status.code(), Some(2));
    assert_eq!(hopfscope(dir.path(), &["example", "--name", "case-ii", "--n", "3"], None).status.code(), Some(2));
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfscope"));
    let out = cmd.args(["combi", "--m", "3"]).env("HOPFSCOPE_THREADS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tame_ideal_spec_invocation() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_ok(dir.path(), &["tame-ideal", "--family", "F2", "--m", "3", "--a", "-1", "--emit", "algebra.json"]);
    assert_eq!(r["result"]["dim"], 12);
    assert_eq!(r["result"]["frobenius"]["socle_dim"], 1);
    let v = run_ok(dir.path(), &["verify", "algebra.json"]);
    assert_eq!(v["result"]["report"]["level"], "algebra");
    // an algebra-only file has no coalgebra to filter
    assert_eq!(hopfscope(dir.path(), &["coradical", "algebra.json"], None).status.code(), Some(2));
}

#[test]
fn combi_printout() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_ok(dir.path(), &["combi", "--m", "3", "--l", "2", "--z", "z3"]);
    assert_eq!(r["result"]["polynomials"][0]["H1"], "1*t^0 + 1*t^1 + 1*t^2");
    assert_eq!(r["result"]["vanishing"]["report"]["all_vanish"], true);
    let r = run_ok(dir.path(), &["combi", "--m", "4", "--z", "-1"]);
    assert_eq!(r["result"]["vanishing"]["report"]["all_vanish"], false);
    assert_eq!(r["result"]["vanishing"]["report"]["agrees"], true);
}

#[test]
fn bosonize_and_radford_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "case-ii", "--n", "2", "--emit-dir", "c2"]);
    let b = run_ok(
        dir.path(),
        &[
            "bosonize", "--r", "c2/r.json", "--hp", "c2/hp.json", "--action", "c2/action.json", "--coaction",
            "c2/coaction.json", "--emit", "out.json",
        ],
    );
    assert_eq!(b["result"]["dim"], 8);
    let read = |p: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(dir.path().join(p)).unwrap()).unwrap() };
    assert_eq!(read("out.json"), read("c2/h.json"));
    let r = run_ok(dir.path(), &["radford", "--h", "out.json", "--proj", "c2/proj.json", "--incl", "c2/incl.json"]);
    assert_eq!(r["result"]["projection_rank"], 4);
    assert_eq!(r["result"]["r_h_basis"], serde_json::json!(["1", "u", "v", "uv"]));
    assert_eq!(r["result"]["braided_coproduct"], true);
}

#[test]
fn broken_yd_data_fails_checks() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "case-ii", "--n", "2", "--emit-dir", "c2"]);
    // drop the action of g entirely: g would act by 0
    std::fs::write(dir.path().join("c2/action.json"), "[]").unwrap();
    let out = hopfscope(
        dir.path(),
        &["bosonize", "--r", "c2/r.json", "--hp", "c2/hp.json", "--action", "c2/action.json", "--coaction", "c2/coaction.json"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["result"]["yd"]["checks"].is_array());
}

#[test]
fn solve_k_reports_discrepancy() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_ok(dir.path(), &["solve-k", "--name", "d8star"]);
    let k = &r["result"]["k"];
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(k[i][j], if i == j { "-1" } else { "0" });
        }
    }
    assert_eq!(r["result"]["case_i"]["all_pass"], true);
    let notes = r["result"]["example"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("F2(m=1,a=-1)")));
    let ex = run_ok(dir.path(), &["example", "--name", "q8star", "--emit-dir", "q8"]);
    assert_eq!(ex["result"]["notes"], r["result"]["example"]["notes"]);
    let f = run_ok(dir.path(), &["solve-k", "q8/h.json", "--c", "q8/c.json", "--x", "q8/x.json"]);
    assert_eq!(f["result"]["k"], r["result"]["k"]);
}

#[test]
fn based_ring_and_link_quiver_with_hints() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "d8star", "--emit-dir", "d8"]);
    let b = run_ok(dir.path(), &["based-ring", "d8/h.json", "--simples-hint", "d8/hints.json"]);
    assert_eq!(b["result"]["all_pass"], true);
    let labels: Vec<&str> =
        b["result"]["table"]["simples"].as_array().unwrap().iter().map(|s| s["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["1", "X", "Y", "XY", "C"]);
    assert_eq!(b["result"]["arrow_divisibility"]["binding"], true);
    assert_eq!(b["result"]["arrow_divisibility"]["report"]["all_divide"], true);
    let q = run_ok(dir.path(), &["link-quiver", "d8/h.json", "--simples-hint", "d8/hints.json"]);
    assert_eq!(q["result"]["one_sided"]["into_unit"], 1);
}

#[test]
fn report_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopfscope(dir.path(), &["combi", "--m", "2", "--report", "r.json"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(r["command"], "combi");
}

#[test]
fn reports_are_byte_identical_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    run_ok(dir.path(), &["example", "--name", "d8star", "--emit", "d8.json"]);
    for args in [
        vec!["verify", "--exhaustive", "d8.json"],
        vec!["rep-type", "d8.json"],
        vec!["based-ring", "d8.json"],
        vec!["coradical", "--bases", "d8.json"],
    ] {
        let outs: Vec<Vec<u8>> = [1, 1, 3, 8].iter().map(|&t| hopfscope(dir.path(), &args, Some(t)).stdout).collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}
