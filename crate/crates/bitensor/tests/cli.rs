//! End-to-end tests of the command-line interface: file round trips,
//! determinism, exit codes, and diagnostics.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bitensor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn CLI")
}

fn run_expecting(args: &[&str], code: i32) -> Output {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "args={args:?}\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn path_str(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_product_then_decide_reports_a_product() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let verdict = dir.path().join("verdict.json");
    run_expecting(
        &["gen", "product", "--seed", "7", "--out", path_str(&state)],
        0,
    );
    run_expecting(
        &[
            "decide",
            "--in",
            path_str(&state),
            "--out",
            path_str(&verdict),
        ],
        0,
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&verdict).unwrap()).unwrap();
    assert_eq!(doc["is_product"], serde_json::Value::Bool(true));
    assert!(doc["max_indicator"].as_f64().unwrap() < 1e-9);
    assert_eq!(doc["tolerance"].as_f64().unwrap(), 1e-9);
    assert!(doc["sigma_ratio"].as_f64().unwrap() < 1e-12);
}

#[test]
fn gen_bell01_invariants_show_four_half_magnitude_components() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let report = dir.path().join("report.json");
    run_expecting(&["gen", "bell01", "--out", path_str(&state)], 0);
    run_expecting(
        &[
            "invariants",
            "--in",
            path_str(&state),
            "--out",
            path_str(&report),
        ],
        0,
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();

    let norm = |v: &serde_json::Value| -> f64 {
        let re = v[0].as_f64().unwrap();
        let im = v[1].as_f64().unwrap();
        (re * re + im * im).sqrt()
    };
    assert!((doc["I1"][0].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(doc["I1"][1].as_f64().unwrap(), 0.0);

    let mut halves = 0;
    let mut others = 0;
    let mut tally = |v: &serde_json::Value| {
        let n = norm(v);
        if (n - 0.5).abs() < 1e-12 {
            halves += 1;
        } else if n == 0.0 {
            others += 1;
        }
    };
    for key in ["I1", "I2", "I2A", "I2B"] {
        tally(&doc[key]);
    }
    for key in ["KA", "KB", "LA", "LB"] {
        for mu in 0..4 {
            tally(&doc[key][mu]);
        }
    }
    for mu in 0..4 {
        for nu in 0..4 {
            tally(&doc["KAB"][mu][nu]);
        }
    }
    assert_eq!(halves, 4);
    assert_eq!(others, 32);
    assert!((doc["max_abs"].as_f64().unwrap() - 0.5).abs() < 1e-12);

    let verdict = dir.path().join("verdict.json");
    run_expecting(
        &[
            "decide",
            "--in",
            path_str(&state),
            "--out",
            path_str(&verdict),
        ],
        0,
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&verdict).unwrap()).unwrap();
    assert_eq!(doc["is_product"], serde_json::Value::Bool(false));
    assert!((doc["max_indicator"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn generation_is_byte_identical_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for kind in ["random-rank-1", "random-rank-3", "product"] {
        run_expecting(&["gen", kind, "--seed", "42", "--out", path_str(&first)], 0);
        run_expecting(
            &["gen", kind, "--seed", "42", "--out", path_str(&second)],
            0,
        );
        assert_eq!(
            std::fs::read(&first).unwrap(),
            std::fs::read(&second).unwrap(),
            "kind={kind}"
        );
        run_expecting(
            &["gen", kind, "--seed", "43", "--out", path_str(&second)],
            0,
        );
        assert_ne!(
            std::fs::read(&first).unwrap(),
            std::fs::read(&second).unwrap(),
            "kind={kind}"
        );
    }
}

#[test]
fn zero_parameter_transform_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let transformed = dir.path().join("transformed.json");
    run_expecting(
        &[
            "gen",
            "random-rank-2",
            "--seed",
            "5",
            "--out",
            path_str(&state),
        ],
        0,
    );
    run_expecting(
        &[
            "transform",
            "--in",
            path_str(&state),
            "--out",
            path_str(&transformed),
        ],
        0,
    );
    assert_eq!(
        std::fs::read(&state).unwrap(),
        std::fs::read(&transformed).unwrap()
    );
}

#[test]
fn transform_preserves_scalar_components_and_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let moved = dir.path().join("moved.json");
    let before = dir.path().join("before.json");
    let after = dir.path().join("after.json");
    run_expecting(
        &[
            "gen",
            "random-rank-1",
            "--seed",
            "9",
            "--out",
            path_str(&state),
        ],
        0,
    );
    run_expecting(
        &[
            "transform",
            "--in",
            path_str(&state),
            "--omega-a",
            "0.3,-0.2,0.1,0.4,-0.5,0.2",
            "--omega-b",
            "-0.1,0.2,0.3,-0.4,0.5,-0.6",
            "--parity-b",
            "--out",
            path_str(&moved),
        ],
        0,
    );
    run_expecting(
        &[
            "invariants",
            "--in",
            path_str(&state),
            "--out",
            path_str(&before),
        ],
        0,
    );
    run_expecting(
        &[
            "invariants",
            "--in",
            path_str(&moved),
            "--out",
            path_str(&after),
        ],
        0,
    );
    let before: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&before).unwrap()).unwrap();
    let after: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&after).unwrap()).unwrap();
    for key in ["I1", "I2", "I2A", "I2B"] {
        for part in 0..2 {
            let b = before[key][part].as_f64().unwrap();
            let a = after[key][part].as_f64().unwrap();
            assert!((a - b).abs() < 1e-9, "{key}[{part}]: {b} vs {a}");
        }
    }

    let verdict = dir.path().join("verdict.json");
    run_expecting(
        &[
            "decide",
            "--in",
            path_str(&moved),
            "--out",
            path_str(&verdict),
        ],
        0,
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&verdict).unwrap()).unwrap();
    assert_eq!(doc["is_product"], serde_json::Value::Bool(true));
}

#[test]
fn state_files_survive_write_read_cycles_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    run_expecting(
        &[
            "gen",
            "random-rank-4",
            "--seed",
            "11",
            "--out",
            path_str(&state),
        ],
        0,
    );
    let loaded = bitensor::files::read_state(&state).unwrap();
    let rewritten = dir.path().join("rewritten.json");
    bitensor::files::write_state(&rewritten, &loaded).unwrap();
    assert_eq!(
        std::fs::read(&state).unwrap(),
        std::fs::read(&rewritten).unwrap()
    );
}

#[test]
fn malformed_input_exits_2_with_a_named_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"psi\": [[1, 2], [3]]}").unwrap();
    let out = run_expecting(&["invariants", "--in", path_str(&bad)], 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("bad.json"), "{stderr}");
    assert!(stderr.contains("line"), "{stderr}");

    let missing = dir.path().join("missing.json");
    let out = run_expecting(&["decide", "--in", path_str(&missing)], 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("missing.json"), "{stderr}");

    let zero = dir.path().join("zero.json");
    std::fs::write(
        &zero,
        "{\"psi\": [[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],\
          [[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]}",
    )
    .unwrap();
    let out = run_expecting(&["invariants", "--in", path_str(&zero)], 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("psi"), "{stderr}");
}

#[test]
fn usage_errors_exit_2() {
    run_expecting(&["gen", "no-such-kind"], 2);
    run_expecting(&["frobnicate"], 2);
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    run_expecting(&["gen", "bell01", "--out", path_str(&state)], 0);
    // Five omega entries instead of six.
    run_expecting(
        &[
            "transform",
            "--in",
            path_str(&state),
            "--omega-a",
            "1,2,3,4,5",
        ],
        2,
    );
    // Out-of-bound omega magnitude.
    run_expecting(
        &[
            "transform",
            "--in",
            path_str(&state),
            "--omega-a",
            "11,0,0,0,0,0",
        ],
        2,
    );
    run_expecting(&["decide", "--in", path_str(&state), "--tol", "-1"], 2);
    run_expecting(&["verify", "identities", "--trials", "0"], 2);
}

#[test]
fn verify_exit_codes_follow_suite_outcomes() {
    let out = run_expecting(&["verify", "algebra"], 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("PASS"), "{stdout}");
    assert!(stdout.contains("failures=0"), "{stdout}");

    run_expecting(&["verify", "identities", "--trials", "20"], 0);
    run_expecting(&["verify", "covariance", "--trials", "10"], 0);
    run_expecting(&["verify", "theorem", "--trials", "20"], 0);

    // A tolerance above the 1/2 component bound misclassifies every
    // entangled trial, so the suite must fail with exit code 1.
    let out = run_expecting(&["verify", "theorem", "--trials", "2", "--tol", "0.9"], 1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL"), "{stdout}");
}

#[test]
fn gen_without_out_prints_the_document() {
    let out = run_expecting(&["gen", "bell03"], 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let half = doc["psi"][0][0][0].as_f64().unwrap();
    assert!((half - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
}
