//! End-to-end CLI behavior: documented examples, exit codes, file output,
//! the environment tolerance override, and CSV re-parsing.

use std::process::{Command, Output};

use projpair::sampling::random_projection;
use projpair::ComplexMatrix;

fn projpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projpair"))
        .args(args)
        .env_remove("PROJPAIR_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn pair_report_carries_the_trace_identity() {
    let out = projpair(&["pair", "--n", "64", "--set-i", "0..16", "--set-j", "0..16"]);
    let text = stdout(&out);
    assert!(text.contains("hs_sq = 4.00000000000e0"), "{text}");
    assert!(text.contains("expected_hs_sq = 4.00000000000e0"));
    assert!(text.starts_with("record = localization-report\n"));
}

#[test]
fn dft_n1_is_trivial() {
    let text = stdout(&projpair(&["dft", "--n", "1"]));
    assert!(text.contains("norm_h = 0.00000000000e0"), "{text}");
    assert!(text.contains("exp_residual = 0.00000000000e0"), "{text}");
    assert!(text.contains("rank_e1 = 1"));
}

#[test]
fn geodesic_on_equal_projections_is_zero() {
    // I = J = everything makes P = Q = identity.
    let text = stdout(&projpair(&["geodesic", "--n", "8", "--set-i", "0..8"]));
    assert!(text.contains("norm_x = 0.00000000000e0"), "{text}");
    let residual_line = text
        .lines()
        .find(|l| l.starts_with("endpoint_residual"))
        .unwrap();
    let value: f64 = residual_line.split(" = ").nth(1).unwrap().parse().unwrap();
    assert!(value < 1e-10);
}

#[test]
fn exit_codes_distinguish_failure_modes() {
    // index out of range -> invalid input
    let out = projpair(&["pair", "--n", "8", "--set-i", "0..9"]);
    assert_eq!(out.status.code(), Some(3));
    // no unique geodesic: P = identity on {0..4}, Q = 0
    let out = projpair(&["geodesic", "--n", "8", "--set-i", "0..4", "--set-j", ""]);
    assert_eq!(out.status.code(), Some(4));
    // dft of size zero
    let out = projpair(&["dft", "--n", "0"]);
    assert_eq!(out.status.code(), Some(3));
    // missing file -> io error
    let out = projpair(&["factorize", "--file-p", "/nonexistent/p.csv", "--file-q", "/nonexistent/q.csv"]);
    assert_eq!(out.status.code(), Some(7));
    // clap usage error keeps its conventional status
    let out = projpair(&["pair"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factorize_rejects_non_projection_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    projpair::io::write_matrix_file(&bad, &ComplexMatrix::diag(&[2.0, 1.0])).unwrap();
    let good = dir.path().join("good.csv");
    projpair::io::write_matrix_file(&good, &ComplexMatrix::diag(&[1.0, 0.0])).unwrap();
    let out = projpair(&[
        "factorize",
        "--file-p",
        bad.to_str().unwrap(),
        "--file-q",
        good.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn factorize_reports_minimality_of_canonical_pair() {
    let dir = tempfile::tempdir().unwrap();
    let p_path = dir.path().join("p.csv");
    let q_path = dir.path().join("q.csv");
    projpair::io::write_matrix_file(&p_path, &random_projection(10, 4, 21)).unwrap();
    projpair::io::write_matrix_file(&q_path, &random_projection(10, 5, 22)).unwrap();
    let text = stdout(&projpair(&[
        "factorize",
        "--file-p",
        p_path.to_str().unwrap(),
        "--file-q",
        q_path.to_str().unwrap(),
        "--samples",
        "300",
        "--seed",
        "11",
    ]));
    assert!(text.contains("canonical_passes = true"), "{text}");
    let violation: f64 = text
        .lines()
        .find(|l| l.starts_with("max_violation"))
        .unwrap()
        .split(" = ")
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!(violation <= 1e-9, "violation {violation}");
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = projpair(&[
        "pair",
        "--n",
        "16",
        "--set-i",
        "0..4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("record = localization-report"));
}

#[test]
fn env_tolerance_override_is_honored() {
    let output = Command::new(env!("CARGO_BIN_EXE_projpair"))
        .args(["geodesic", "--n", "16", "--set-i", "0..8"])
        .env("PROJPAIR_TOL", "1e-7")
        .output()
        .unwrap();
    assert!(output.status.success());

    let output = Command::new(env!("CARGO_BIN_EXE_projpair"))
        .args(["geodesic", "--n", "16", "--set-i", "0..8"])
        .env("PROJPAIR_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn emitted_csv_reparses_at_twelve_digits() {
    let text = stdout(&projpair(&[
        "sweep",
        "--ns",
        "16,32",
        "--fill",
        "0.25",
        "--format",
        "csv",
    ]));
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "n,set_i,set_j,gammas,norm_pq,hs_sq,expected_hs_sq,corner_dims,distance,commutator_norm"
    );
    let mut row_count = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 10);
        for numeric in [fields[4], fields[5], fields[6], fields[8], fields[9]] {
            let value: f64 = numeric.parse().expect("numeric field parses");
            assert!(value.is_finite());
        }
        for gamma in fields[3].split(';') {
            let value: f64 = gamma.parse().unwrap();
            assert!((0.0..std::f64::consts::FRAC_PI_2).contains(&value));
        }
        row_count += 1;
    }
    assert_eq!(row_count, 2);

    // Re-running reproduces the same bytes, so the parsed values are the
    // emitted values: 12 significant digits round-trip by construction.
    let again = stdout(&projpair(&[
        "sweep", "--ns", "16,32", "--fill", "0.25", "--format", "csv",
    ]));
    assert_eq!(text, again);
}
