//! End-to-end runs of the `walkmetric` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_walkmetric"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn walkmetric")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).unwrap();
}

#[test]
fn generate_cycle_writes_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cycle.edges");
    let res = run(&["generate", "cycle", "50", "-o", out.to_str().unwrap()]);
    assert!(res.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 50);
    assert!(text.lines().next().unwrap().ends_with(" 1"));
}

#[test]
fn distances_pair_prints_reference_value() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("cycle.edges");
    assert!(run(&["generate", "cycle", "50", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let res = run(&[
        "distances",
        "-i",
        edges.to_str().unwrap(),
        "--beta",
        "1.0",
        "--mode",
        "sqrt",
        "--pair",
        "0",
        "1",
    ]);
    assert!(res.status.success());
    let value: f64 = stdout(&res).trim().parse().unwrap();
    assert!((value - 9.899).abs() < 1e-3);
}

#[test]
fn distances_matrix_csv_and_heatmap() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("lattice.edges");
    assert!(run(&["generate", "lattice2d", "4", "4", "-o", edges.to_str().unwrap()])
        .status
        .success());

    let csv = dir.path().join("d.csv");
    assert!(run(&[
        "distances",
        "-i",
        edges.to_str().unwrap(),
        "--mode",
        "commute",
        "-o",
        csv.to_str().unwrap()
    ])
    .status
    .success());
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 17); // header + 16 rows
    assert!(text.starts_with("node,0,1,"));

    let pgm = dir.path().join("d.pgm");
    assert!(run(&[
        "distances",
        "-i",
        edges.to_str().unwrap(),
        "--mode",
        "sqrt",
        "-o",
        pgm.to_str().unwrap()
    ])
    .status
    .success());
    let bytes = fs::read(&pgm).unwrap();
    assert!(bytes.starts_with(b"P5\n16 16\n255\n"));
    assert_eq!(bytes.len(), b"P5\n16 16\n255\n".len() + 256);
}

#[test]
fn embed_writes_coordinate_csv() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("lattice.edges");
    assert!(run(&["generate", "lattice2d", "10", "10", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let coords = dir.path().join("coords.csv");
    let res = run(&[
        "embed",
        "-i",
        edges.to_str().unwrap(),
        "-k",
        "3",
        "-o",
        coords.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(&coords).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "node,deg,c1,c2,c3");
    assert_eq!(lines.len(), 101);
}

#[test]
fn hitting_pair_matches_hand_solve() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("path.edges");
    write(&edges, "0 1\n1 2\n");
    let res = run(&[
        "hitting",
        "-i",
        edges.to_str().unwrap(),
        "--pair",
        "0",
        "2",
    ]);
    assert!(res.status.success());
    let value: f64 = stdout(&res).trim().parse().unwrap();
    assert!((value - 4.0).abs() < 1e-8);
}

#[test]
fn ball_lists_members() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("cycle.edges");
    assert!(run(&["generate", "cycle", "50", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let res = run(&["ball", "0", "10.0", "-i", edges.to_str().unwrap()]);
    assert!(res.status.success());
    assert_eq!(stdout(&res).trim(), "0 1 49");
}

#[test]
fn analyze_summarizes_and_dumps_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k4.edges");
    assert!(run(&["generate", "complete", "4", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let spectrum = dir.path().join("spectrum.csv");
    let res = run(&[
        "analyze",
        "-i",
        edges.to_str().unwrap(),
        "--dump-spectrum",
        spectrum.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let summary = stdout(&res);
    assert!(summary.contains("nodes: 4"));
    assert!(summary.contains("edges: 6"));
    let csv = fs::read_to_string(&spectrum).unwrap();
    assert!(csv.starts_with("s,mu,psi_1,psi_2,psi_3,psi_4"));
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn simulate_is_seed_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k3.edges");
    assert!(run(&["generate", "complete", "3", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let args = [
        "simulate",
        "-i",
        edges.to_str().unwrap(),
        "--pair",
        "0",
        "1",
        "--trials",
        "2000",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("mean "));
}

#[test]
fn validate_reports_discrepancies() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("cycle.edges");
    assert!(run(&["generate", "cycle", "9", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let report = dir.path().join("report.csv");
    let res = run(&[
        "validate",
        "-i",
        edges.to_str().unwrap(),
        "--trials",
        "500",
        "--seed",
        "3",
        "-o",
        report.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(&report).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "x,y,spectral,solve,mc_mean,mc_stderr,rel_discrepancy"
    );
    for line in lines {
        let rel: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(rel <= 1e-8);
    }
}

#[test]
fn generate_then_analyze_round_trips_for_all_kinds() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        vec!["path", "5"],
        vec!["cycle", "6"],
        vec!["complete", "4"],
        vec!["lattice2d", "2", "3"],
    ] {
        let edges = dir.path().join("g.edges");
        let mut args = vec!["generate"];
        args.extend(spec.iter());
        args.extend(["-o", edges.to_str().unwrap()]);
        assert!(run(&args).status.success());
        assert!(run(&["analyze", "-i", edges.to_str().unwrap()])
            .status
            .success());
    }
}

#[test]
fn beta_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("path.edges");
    write(&edges, "0 1\n1 2\n");
    let betas = dir.path().join("beta.txt");
    write(&betas, "1.0\n0.5\n1.0\n");
    let res = run(&[
        "hitting",
        "-i",
        edges.to_str().unwrap(),
        "--beta-file",
        betas.to_str().unwrap(),
        "--pair",
        "0",
        "2",
    ]);
    assert!(res.status.success());
}

#[test]
fn exit_codes() {
    // usage errors -> 1
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["generate", "moebius", "9"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g.edges");
    write(&edges, "0 1\n2 3\n");
    // disconnected graph -> 2
    assert_eq!(
        run(&["analyze", "-i", edges.to_str().unwrap()]).status.code(),
        Some(2)
    );
    // malformed file -> 2
    write(&edges, "0 1 1 extra\n");
    assert_eq!(
        run(&["analyze", "-i", edges.to_str().unwrap()]).status.code(),
        Some(2)
    );
    // bad beta value -> usage, 1
    write(&edges, "0 1\n1 2\n");
    assert_eq!(
        run(&["analyze", "-i", edges.to_str().unwrap(), "--beta", "0.0"])
            .status
            .code(),
        Some(1)
    );
    // conflicting beta sources -> usage, 1
    assert_eq!(
        run(&[
            "analyze",
            "-i",
            edges.to_str().unwrap(),
            "--beta",
            "0.5",
            "--beta-file",
            edges.to_str().unwrap()
        ])
        .status
        .code(),
        Some(1)
    );
    // help -> 0
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("lat.edges");
    assert!(run(&["generate", "lattice2d", "5", "5", "-o", edges.to_str().unwrap()])
        .status
        .success());
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        assert!(run(&[
            "distances",
            "-i",
            edges.to_str().unwrap(),
            "--mode",
            "sqrt",
            "-o",
            out.to_str().unwrap()
        ])
        .status
        .success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}
