use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("werner").chain(args.iter().copied());
    let code = werner_cli::run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "expected success, got exit {code}");
    let v: Value = serde_json::from_str(&out).expect("stdout is JSON");
    assert_eq!(v["schema_version"], 1);
    v
}

fn spawn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_werner"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn enumerate_matchings_of_four_text() {
    let (code, out) = run(&["enumerate", "--matchings", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 | 3 4\n1 4 | 2 3\n");
}

#[test]
fn enumerate_counts_follow_catalan() {
    let v = run_json(&["enumerate", "--matchings", "--n", "6", "--format", "json"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["kind"], "matchings");
    let v = run_json(&["enumerate", "--partitions", "--n", "4", "--format", "json"]);
    assert_eq!(v["count"], 14);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 14);
}

#[test]
fn enumerate_needs_exactly_one_kind() {
    assert_eq!(run(&["enumerate", "--n", "4"]).0, 1);
    assert_eq!(
        run(&["enumerate", "--matchings", "--partitions", "--n", "4"]).0,
        1
    );
}

#[test]
fn enumerate_rejects_odd_matchings() {
    assert_eq!(run(&["enumerate", "--matchings", "--n", "3"]).0, 1);
}

#[test]
fn state_singlet_amplitudes() {
    let v = run_json(&["state", "--singlet"]);
    assert_eq!(v["kind"], "singlet");
    assert_eq!(v["n"], 2);
    assert_eq!(v["zero"], false);
    let amps = v["amps"].as_array().unwrap();
    assert_eq!(amps.len(), 4);
    let r = 0.5f64.sqrt();
    assert!((amps[1][0].as_f64().unwrap() - r).abs() < 1e-12);
    assert!((amps[2][0].as_f64().unwrap() + r).abs() < 1e-12);
    assert_eq!(amps[0][0].as_f64().unwrap(), 0.0);
    assert_eq!(amps[3][0].as_f64().unwrap(), 0.0);
}

#[test]
fn state_cyclic_short_orbit_is_zero() {
    let v = run_json(&["state", "--cyclic", "00"]);
    assert_eq!(v["zero"], true);
    for pair in v["amps"].as_array().unwrap() {
        assert_eq!(pair[0].as_f64().unwrap(), 0.0);
        assert_eq!(pair[1].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn state_cyclic_001_has_three_phased_amps() {
    let v = run_json(&["state", "--cyclic", "001"]);
    assert_eq!(v["zero"], false);
    let amps = v["amps"].as_array().unwrap();
    let r = 1.0 / 3.0f64.sqrt();
    let tau = 2.0 * std::f64::consts::PI / 3.0;
    for (idx, k) in [(1usize, 0.0f64), (2, 1.0), (4, 2.0)] {
        let (re, im) = (
            amps[idx][0].as_f64().unwrap(),
            amps[idx][1].as_f64().unwrap(),
        );
        assert!((re - r * (tau * k).cos()).abs() < 1e-12);
        assert!((im - r * (tau * k).sin()).abs() < 1e-12);
    }
    for idx in [0, 3, 5, 6, 7] {
        assert_eq!(amps[idx][0].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn state_chord_pair_pauli_coefficients() {
    let v = run_json(&["state", "--chord", "1 2", "--format", "pauli"]);
    assert_eq!(v["n"], 2);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 16);
    assert!((coeffs[0].as_f64().unwrap() - 0.25).abs() < 1e-12);
    for idx in [5, 10, 15] {
        assert!((coeffs[idx].as_f64().unwrap() + 0.25).abs() < 1e-12);
    }
}

#[test]
fn state_cn_two_matrix_is_singlet_projector() {
    let v = run_json(&["state", "--cn", "2", "--format", "matrix"]);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 4);
    let at = |i: usize, j: usize| m[i][j][0].as_f64().unwrap();
    assert!((at(1, 1) - 0.5).abs() < 1e-12);
    assert!((at(2, 2) - 0.5).abs() < 1e-12);
    assert!((at(1, 2) + 0.5).abs() < 1e-12);
    assert!((at(0, 0)).abs() < 1e-12);
}

#[test]
fn state_needs_exactly_one_source() {
    assert_eq!(run(&["state"]).0, 1);
    assert_eq!(run(&["state", "--singlet", "--cn", "2"]).0, 1);
}

#[test]
fn state_amps_rejects_mixed_sources() {
    assert_eq!(run(&["state", "--cn", "2", "--format", "amps"]).0, 1);
}

#[test]
fn check_diagram_state_is_invariant() {
    let v = run_json(&["check", "--diagram", "1 2 | 3 4"]);
    assert_eq!(v["n"], 4);
    assert_eq!(v["is_werner"], true);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["random_checks"], 100);
    assert!(v["residual"].as_f64().unwrap() < 1e-12);
    assert!(v["random_conjugation_max"].as_f64().unwrap() < 1e-12);
}

#[test]
fn dimension_three_qubits() {
    let v = run_json(&["dimension", "--n", "3"]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["commutant_dim"], 5);
    assert_eq!(v["catalan"], 5);
}

#[test]
fn dimension_pure_six_qubits() {
    let v = run_json(&["dimension", "--n", "6", "--pure"]);
    assert_eq!(v["pure_dim"], 5);
    let v = run_json(&["dimension", "--n", "5", "--pure"]);
    assert_eq!(v["pure_dim"], 0);
}

#[test]
fn conjecture_two_qubits_consistent() {
    let v = run_json(&["conjecture", "--n", "2"]);
    assert_eq!(v["num_diagrams"], 2);
    assert_eq!(v["gram_rank"], 2);
    assert_eq!(v["catalan"], 2);
    assert_eq!(v["commutant_dim"], 2);
    assert_eq!(v["verdict"], "consistent");
}

#[test]
fn conjecture_csv_emits_gram_matrix() {
    let (code, out) = run(&["conjecture", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<f64>> = out
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), 5);
        for (j, x) in row.iter().enumerate() {
            assert!((x - rows[j][i]).abs() < 1e-12, "Gram matrix is symmetric");
        }
        assert!(row[i] > 0.0);
    }
}

#[test]
fn stabilizer_two_matchings_meet_at_the_full_block() {
    let v = run_json(&["stabilizer", "--terms", "1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : 1.0"]);
    assert_eq!(v["glb"], "1 2 3 4");
    assert_eq!(v["computed_dim"], 3);
    assert_eq!(v["predicted_dim"], 3);
    assert_eq!(v["containment_ok"], true);
    assert_eq!(v["match"], true);
}

#[test]
fn stabilizer_single_diagram_scales_with_blocks() {
    let v = run_json(&["stabilizer", "--terms", "1 2 | 3 | 4 : 1.0"]);
    assert_eq!(v["glb"], "1 2 | 3 | 4");
    assert_eq!(v["computed_dim"], 9);
    assert_eq!(v["predicted_dim"], 9);
    assert_eq!(v["match"], true);
}

#[test]
fn stabilizer_zero_weight_mixture_is_rejected() {
    assert_eq!(run(&["stabilizer", "--terms", "1 2 : 0.0"]).0, 1);
}

#[test]
fn stabilizer_pure_single_chord() {
    let v = run_json(&["stabilizer", "--pure", "--terms", "1 2 | 3 4 : 1.0"]);
    assert_eq!(v["computed_dim"], 6);
    assert_eq!(v["criterion"], false);
    assert_eq!(v["consistent"], true);
}

#[test]
fn stabilizer_pure_crossing_combination() {
    let v = run_json(&[
        "stabilizer",
        "--pure",
        "--terms",
        "1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : 2.0",
    ]);
    assert_eq!(v["computed_dim"], 3);
    assert_eq!(v["criterion"], true);
    assert_eq!(v["consistent"], true);
}

#[test]
fn stabilizer_term_errors_carry_positions() {
    let out = spawn(&["stabilizer", "--terms", "1 2 | 3 x : 1.0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 8"), "stderr: {err}");

    let out = spawn(&["stabilizer", "--terms", "1 2 : 1.0 ; 1 x : 1.0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 14"), "stderr: {err}");

    let out = spawn(&["stabilizer", "--terms", "1 2 | 3 4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn twirl_projects_product_state_onto_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zz.json");
    // |00><00| = (I+Z)/2 (x) (I+Z)/2
    let mut coeffs = vec![0.0; 16];
    for idx in [0, 3, 12, 15] {
        coeffs[idx] = 0.25;
    }
    std::fs::write(
        &path,
        serde_json::json!({"n": 2, "coeffs": coeffs}).to_string(),
    )
    .unwrap();

    let v = run_json(&["twirl", "--in", path.to_str().unwrap()]);
    assert_eq!(v["method"], "exact");
    let out = v["coeffs"].as_array().unwrap();
    assert!((out[0].as_f64().unwrap() - 0.25).abs() < 1e-12);
    for idx in [5, 10, 15] {
        assert!((out[idx].as_f64().unwrap() - 1.0 / 12.0).abs() < 1e-12);
    }
    for idx in [1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14] {
        assert!(out[idx].as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn twirl_monte_carlo_is_seeded_and_close() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zz.json");
    let mut coeffs = vec![0.0; 16];
    for idx in [0, 3, 12, 15] {
        coeffs[idx] = 0.25;
    }
    std::fs::write(
        &path,
        serde_json::json!({"n": 2, "coeffs": coeffs}).to_string(),
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let args = [
        "twirl",
        "--in",
        p,
        "--mc",
        "--samples",
        "20000",
        "--seed",
        "7",
    ];
    let (code_a, out_a) = run(&args);
    let (code_b, out_b) = run(&args);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(out_a, out_b, "same seed gives identical bytes");

    let v: Value = serde_json::from_str(&out_a).unwrap();
    assert_eq!(v["method"], "monte-carlo");
    assert_eq!(v["seed"], 7);
    let out = v["coeffs"].as_array().unwrap();
    assert!((out[0].as_f64().unwrap() - 0.25).abs() < 1e-6);
    for idx in [5, 10, 15] {
        assert!((out[idx].as_f64().unwrap() - 1.0 / 12.0).abs() < 0.05);
    }
}

#[test]
fn twirl_accepts_its_own_output() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let (code, out) = run(&[
        "state",
        "--chord",
        "1 2",
        "--format",
        "pauli",
        "--out",
        first.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty(), "--out leaves stdout empty");

    let v = run_json(&["twirl", "--in", first.to_str().unwrap()]);
    let out = v["coeffs"].as_array().unwrap();
    // the singlet projector is already invariant, so the twirl fixes it
    assert!((out[0].as_f64().unwrap() - 0.25).abs() < 1e-12);
    assert!((out[5].as_f64().unwrap() + 0.25).abs() < 1e-12);
}

#[test]
fn twirl_rejects_bad_inputs() {
    assert_eq!(run(&["twirl", "--in", "/nonexistent/state.json"]).0, 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"coeffs\": [0.25, 0.0]}").unwrap();
    assert_eq!(run(&["twirl", "--in", bad.to_str().unwrap()]).0, 1);

    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["twirl", "--in", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dim.json");
    let (code, stdout_body) = run(&["dimension", "--n", "2"]);
    assert_eq!(code, 0);
    let (code, out) = run(&["dimension", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout_body);
}

#[test]
fn size_caps_refuse_then_force_overrides() {
    assert_eq!(run(&["state", "--cn", "7"]).0, 1);
    let (code, out) = run(&["state", "--cn", "7", "--force", "--format", "matrix"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matrix"].as_array().unwrap().len(), 128);

    assert_eq!(run(&["dimension", "--n", "7"]).0, 1);
    assert_eq!(run(&["conjecture", "--n", "6"]).0, 1);
    assert_eq!(run(&["state", "--cyclic", "1001001001001"]).0, 1);
}

#[test]
fn rejects_nonpositive_tolerances() {
    assert_eq!(run(&["dimension", "--n", "2", "--tol", "0.0"]).0, 1);
    assert_eq!(run(&["check", "--diagram", "1 2", "--tol", "-1e-9"]).0, 1);
}

#[test]
fn binary_reports_usage_errors_on_stderr() {
    let out = spawn(&["dimension", "--n", "not-a-number"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let out = spawn(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));

    let out = spawn(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("werner"));
}

#[test]
fn suite_passes_end_to_end() {
    let out = spawn(&["suite", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("11/11 criteria passed"),
        "suite output: {text}"
    );
    assert_eq!(text.matches("[PASS]").count(), 11);
}
