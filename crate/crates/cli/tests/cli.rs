//! End-to-end tests driving the built `rainbow-kit` binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbow-kit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_find_round_trip_on_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k33.ecg");
    let out = run(&["gen", "bipartite", "--a", "3", "--b", "3", "-o", path_str(&file)]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("delta_c = 3"));

    // No odd rainbow cycle exists; exit code stays 0 (a query, not a check).
    let out = run(&["find", path_str(&file), "--ell", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no rainbow 3-cycle"));

    // All nine 4-cycles of K_{3,3} are rainbow under distinct colors.
    let out = run(&["find", path_str(&file), "--ell", "4", "--count", "--threads", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rainbow 4-cycles: 9"), "{}", stdout(&out));
}

#[test]
fn reduce_preserves_delta_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.ecg");
    let output = dir.path().join("out.ecg");
    std::fs::write(&input, "ecg 1\n4 3\n0 1 0\n1 2 0\n2 3 0\n").unwrap();
    let out = run(&["reduce", path_str(&input), "-o", path_str(&output)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("reduced 3 -> 2 edges"));
    let text = std::fs::read_to_string(&output).unwrap();
    assert_eq!(text, "ecg 1\n4 2\n0 1 0\n2 3 0\n");
}

#[test]
fn prove_emits_witness_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("boosted.ecg");
    let trace = dir.path().join("trace.json");
    let out = run(&[
        "gen", "random", "--n", "60", "--p", "0.5", "--palette", "40", "--boost", "31",
        "--seed", "7", "-o", path_str(&file),
    ]);
    assert!(out.status.success(), "{out:?}");

    let out = run(&[
        "prove", path_str(&file), "--ell", "3", "--no-fallback", "--trace", path_str(&trace),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("cycle:"), "{}", stdout(&out));
    let trace_json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(trace_json["ell"], 3);
    assert_eq!(trace_json["hypothesis_met"], true);
    assert_eq!(trace_json["outcome"]["kind"], "found");
}

#[test]
fn prove_reports_exhaustion_below_threshold() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k66.ecg");
    run(&["gen", "bipartite", "--a", "6", "--b", "6", "-o", path_str(&file)]);
    let out = run(&["prove", path_str(&file), "--ell", "3", "--no-fallback"]);
    // Hypothesis unmet, exhaustion is an ordinary result: exit 0.
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("exhausted"), "{}", stdout(&out));
    assert!(stdout(&out).contains("hypothesis not met"));
}

#[test]
fn stats_json_report_holds() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.ecg");
    let x_file = dir.path().join("x.txt");
    run(&["gen", "bipartite", "--a", "4", "--b", "4", "-o", path_str(&file)]);
    // X = N(0) = the other side.
    std::fs::write(&x_file, "4 5 6 7\n").unwrap();
    let out = run(&[
        "stats", path_str(&file), "--anchor", "0", "--set-file", path_str(&x_file),
        "--report", "json",
    ]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["report"]["holds"], true);
    assert_eq!(report["report"]["anchor"], 0);
    assert!(report["invocation"].as_array().unwrap().len() >= 6);
}

#[test]
fn verify_subcommands_exit_zero() {
    let out = run(&[
        "verify", "theorem", "--ell", "3", "--n-min", "3", "--n-max", "5", "--samples", "25",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("all instances verified"));

    let out = run(&["verify", "delta-bound", "--ell", "3", "--n-max", "12", "--samples", "20", "--json"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["report"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn probe_is_deterministic_under_seed() {
    let args = [
        "probe", "--ell", "3", "--n", "12", "--budget", "2000", "--chains", "2",
        "--seed", "9", "--report", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "{a:?}");
    let a_json: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let b_json: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(a_json["report"], b_json["report"]);
    assert_eq!(a_json["report"]["best_delta_c"], 6);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["find", "/nonexistent.ecg", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed input files are invocation errors too.
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ecg");
    std::fs::write(&bad, "ecg 2\n0 0\n").unwrap();
    let out = run(&["find", path_str(&bad), "--ell", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn ecg_files_round_trip_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.ecg");
    let b = dir.path().join("b.ecg");
    run(&["gen", "random", "--n", "14", "--p", "0.4", "--palette", "5", "--seed", "3", "-o", path_str(&a)]);
    // reduce(reduce(g)) writes the same bytes as reduce(g).
    run(&["reduce", path_str(&a), "-o", path_str(&b)]);
    let once = std::fs::read(&b).unwrap();
    run(&["reduce", path_str(&b), "-o", path_str(&b)]);
    let twice = std::fs::read(&b).unwrap();
    assert_eq!(once, twice);
}
