//! End-to-end tests that drive the compiled binary the way a user would:
//! spawn it with real arguments, then check exit codes, stdout bytes, and
//! written files. Report *content* is covered by the acceptance suite;
//! here we pin the command-line contract itself.

use std::path::Path;
use std::process::{Command, Output};

use crclab::format;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crclab"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .output()
        .expect("spawning the crclab binary should succeed")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout should be UTF-8")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr should be UTF-8")
}

#[test]
fn construct_output_parses_back_to_the_same_code() {
    let out = run(&["construct", "Cm", "6"]);
    assert!(out.status.success(), "construct Cm 6 should exit 0");

    let code = format::parse_code(stdout_of(&out)).expect("emitted code file should parse");
    assert_eq!(code.n(), 15);
    assert_eq!(code.k(), 10);

    // The same construction through the library must agree matrix-for-matrix.
    let direct = crclab_core::families::build_cm(6).unwrap();
    assert_eq!(format::render_code(&code), format::render_code(&direct));
}

#[test]
fn construct_writes_the_file_named_by_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("union8.code");
    let out = run(&["construct", "Cm-union", "8", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(
        stdout_of(&out).is_empty(),
        "with --out the code text goes to the file, not stdout"
    );

    let text = std::fs::read_to_string(&path).unwrap();
    let code = format::parse_code(&text).expect("written file should parse");
    assert_eq!(code.n(), 28);
    assert_eq!(code.k(), 22);
}

#[test]
fn union_family_rejects_odd_m_with_a_usage_exit() {
    let out = run(&["construct", "Cm-union", "7"]);
    assert_eq!(out.status.code(), Some(2), "invalid input must exit 2");
    assert!(
        stderr_of(&out).contains("error:"),
        "diagnostic goes to stderr"
    );
    assert!(out.stdout.is_empty(), "nothing is emitted on failure");
}

#[test]
fn unknown_family_name_is_a_usage_error() {
    let out = run(&["construct", "Hm", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("Hm"));
}

#[test]
fn guard_refuses_oversized_instances_with_exit_two() {
    // m = 42 needs a 2^41-entry coset table; the guard must refuse before
    // allocating anything.
    let out = run(&["verify", "Cm", "42", "--cr"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("too large"));
}

#[test]
fn edge_list_export_matches_the_complete_graph_on_sixteen_vertices() {
    // The m = 6 union code has covering radius 1, so its coset graph is
    // K_16: 120 edges, every pair adjacent.
    let out = run(&["graph", "Cm-union", "6"]);
    assert!(out.status.success());
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines.len(), 120);
    assert_eq!(lines[0], "0 1");
    assert_eq!(*lines.last().unwrap(), "14 15");
    for line in &lines {
        let mut it = line.split_whitespace();
        let u: u32 = it.next().unwrap().parse().unwrap();
        let v: u32 = it.next().unwrap().parse().unwrap();
        assert!(u < v, "edges are emitted with the smaller endpoint first");
        assert!(v < 16);
    }
}

#[test]
fn dot_export_lists_every_vertex_and_edge_once() {
    let out = run(&["graph", "Cm", "4", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("graph coset {\n"));
    assert!(text.ends_with("}\n"));
    assert_eq!(text.matches("label=").count(), 8, "one label per vertex");
    assert_eq!(text.matches(" -- ").count(), 24, "one line per edge");
}

#[test]
fn graph_export_honours_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let out = run(&["graph", "Cm", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 24);
}

#[test]
fn verify_emits_json_and_exits_zero_on_a_passing_run() {
    let out = run(&["verify", "Cm", "6", "--cr"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(report["family"], "Cm");
    assert_eq!(report["m"], 6);
    assert_eq!(report["passed"], true);
    assert_eq!(report["cr"]["cr"], true);
    // Sections that were not requested are absent as objects: null.
    assert!(report["ct"].is_null());
    assert!(report["graph"].is_null());
}

#[test]
fn verify_with_no_section_flags_runs_everything() {
    let out = run(&["verify", "Cm", "4"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    for key in ["cr", "ct", "inverse_array", "weight_reflection", "graph", "spectra"] {
        assert!(
            !report[key].is_null(),
            "{key} should be populated when no section flags are given"
        );
    }
}

#[test]
fn verify_reports_are_byte_identical_across_runs_and_thread_counts() {
    let a = run(&["verify", "Cm", "5", "--all"]);
    let b = run(&["verify", "Cm", "5", "--all"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout, "same invocation, same bytes");

    let c = bin()
        .args(["verify", "Cm", "5", "--all"])
        .env("CRCLAB_THREADS", "1")
        .output()
        .unwrap();
    assert!(c.status.success());
    assert_eq!(
        a.stdout, c.stdout,
        "thread count must not leak into the report"
    );
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let out = run(&["verify", "Cm", "4", "--all"]);
    assert!(out.status.success());
    assert!(stderr_of(&out).contains("timing:"));
    assert!(!stdout_of(&out).contains("timing:"));
}

#[test]
fn missing_out_directory_is_an_io_error() {
    let path = Path::new("/nonexistent-dir-for-sure/x.code");
    let out = run(&["construct", "Cm", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("error:"));
}
