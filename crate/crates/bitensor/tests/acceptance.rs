//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with --nocapture) and enforcing its runtime
//! budget.

use bitensor::bitensors::{compute_all, parity_action, Lab};
use bitensor::detect::DEFAULT_DECISION_TOL;
use bitensor::lorentz::{
    parity_spinor, random_proper_transform, representation_residual, SpinorTransform,
};
use bitensor::states::random_state;
use bitensor::verify;
use bitensor::{clifford, Mat4c, TwoParticleState};
use num_complex::Complex64;
use std::time::{Duration, Instant};

fn report(name: &str, ok: bool, detail: &str, elapsed: Duration, budget: Duration) {
    let ok = ok && elapsed <= budget;
    println!(
        "{}: {} ({detail}, {elapsed:.2?} of {budget:?} budget)",
        name,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{name} failed: {detail}, elapsed {elapsed:?}");
}

#[test]
fn criterion_1_matrix_algebra_is_exact() {
    let start = Instant::now();
    let outcome = verify::algebra();
    let ok = outcome.passed && outcome.worst_residual == 0.0 && outcome.checks == 35;
    report(
        "criterion 1, exact matrix algebra",
        ok,
        &format!(
            "{} checks, {} failures, worst residual {:e}",
            outcome.checks, outcome.failures, outcome.worst_residual
        ),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_representation_consistency_at_scale_two() {
    let start = Instant::now();
    let c = clifford::charge_conjugation();
    let g5 = clifford::gamma5();
    let mut worst_rep = 0.0f64;
    let mut worst_intertwiner = 0.0f64;
    let mut worst_commute = 0.0f64;
    for trial in 0..200u64 {
        let (_, s, lam) = random_proper_transform(90_000 + trial, 2.0).unwrap();
        worst_rep = worst_rep.max(representation_residual(&s, &lam));
        let m = s.matrix();
        worst_intertwiner = worst_intertwiner.max((m.transpose() * c * *m).max_diff(&c));
        worst_commute = worst_commute.max((*m * g5).max_diff(&(g5 * *m)));
    }
    let ok = worst_rep < 1e-10 && worst_intertwiner < 1e-10 && worst_commute < 1e-12;
    report(
        "criterion 2, representation consistency (200 draws, scale 2)",
        ok,
        &format!(
            "index law {worst_rep:.2e}, transpose intertwiner {worst_intertwiner:.2e}, \
             gamma5 commutator {worst_commute:.2e}"
        ),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_3_covariance_of_all_components() {
    let start = Instant::now();
    let parity = parity_spinor();
    let identity = SpinorTransform::identity();
    let mut worst_scalar = 0.0f64;
    let mut worst_set = 0.0f64;
    let mut parity_exact = true;
    for trial in 0..200u64 {
        let rank = 1 + (trial as usize % 4);
        let state = random_state(70_000 + trial, rank).unwrap();
        let (_, s_a, lam_a) = random_proper_transform(71_000 + trial, 1.0).unwrap();
        let (_, s_b, lam_b) = random_proper_transform(72_000 + trial, 1.0).unwrap();

        let set = compute_all(&state);
        let predicted = set.transformed(&lam_a, &lam_b);
        let recomputed = compute_all(&state.apply_local(&s_a, &s_b));
        let tol = (1e-9 * set.max_abs().max(recomputed.max_abs())).max(1e-12);

        for (before, after) in [
            (set.i1, recomputed.i1),
            (set.i2, recomputed.i2),
            (set.i2a, recomputed.i2a),
            (set.i2b, recomputed.i2b),
        ] {
            worst_scalar = worst_scalar.max((after - before).norm() / tol);
        }
        worst_set = worst_set.max(predicted.max_diff(&recomputed) / tol);

        let direct_a = compute_all(&state.apply_local(&parity, &identity));
        let direct_b = compute_all(&state.apply_local(&identity, &parity));
        parity_exact &= parity_action(&set, Lab::A).max_diff(&direct_a) == 0.0;
        parity_exact &= parity_action(&set, Lab::B).max_diff(&direct_b) == 0.0;
    }
    let ok = worst_scalar < 1.0 && worst_set < 1.0 && parity_exact;
    report(
        "criterion 3, covariance of the 36 components (200 trials)",
        ok,
        &format!(
            "scalar slots at {worst_scalar:.2e} of tolerance, full set at {worst_set:.2e} \
             of tolerance, parity table exact: {parity_exact}"
        ),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_4_minor_identities_at_every_rank() {
    let start = Instant::now();
    let outcome = verify::identities(1000, 80_000).unwrap();
    let ok = outcome.passed && outcome.worst_residual < 1e-12 && outcome.checks == 4000;
    report(
        "criterion 4, 36 linear identities vs minors (1000 states per rank)",
        ok,
        &format!(
            "{} checks, {} failures, worst residual {:.2e}",
            outcome.checks, outcome.failures, outcome.worst_residual
        ),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_classification_equivalence() {
    let start = Instant::now();
    let outcome = verify::theorem(1000, 81_000, DEFAULT_DECISION_TOL).unwrap();
    let ok = outcome.passed && outcome.failures == 0 && outcome.checks == 4000;
    report(
        "criterion 5, product classification (1000 states per rank)",
        ok,
        &format!(
            "{} checks, {} misclassifications, largest rank-1 indicator {:.2e}",
            outcome.checks, outcome.failures, outcome.worst_residual
        ),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_6_worked_states() {
    let start = Instant::now();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = Mat4c::zero();
    psi[(0, 1)] = Complex64::new(r, 0.0);
    psi[(1, 0)] = Complex64::new(-r, 0.0);
    let bell = TwoParticleState::from_coefficients(psi).unwrap();
    let set = compute_all(&bell);

    let mut ok = true;
    let mut nonzero = Vec::new();
    for (label, value) in set.components() {
        if value.norm() > 0.0 {
            ok &= (value.norm() - 0.5).abs() < 1e-12;
            nonzero.push(label);
        }
    }
    ok &= nonzero == ["I1", "KA[0]", "KB[0]", "KAB[0][0]"];

    let mut worst_product = 0.0f64;
    for seed in 0..50u64 {
        let product = random_state(seed, 1).unwrap();
        worst_product = worst_product.max(compute_all(&product).max_abs());
    }
    ok &= worst_product < 1e-12;
    report(
        "criterion 6, worked states",
        ok,
        &format!("nonzero components {nonzero:?} each 1/2, product-state max {worst_product:.2e}"),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_7_cli_round_trip_and_determinism() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let exe = env!("CARGO_BIN_EXE_bitensor");
    let gen = |kind: &str, seed: &str, path: &std::path::Path| {
        let status = std::process::Command::new(exe)
            .args(["gen", kind, "--seed", seed, "--out", path.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
    };

    let mut ok = true;
    let mut worst = 0.0f64;
    for (kind, seed) in [
        ("product", "1"),
        ("bell01", "0"),
        ("bell03", "0"),
        ("random-rank-2", "2"),
        ("random-rank-4", "3"),
    ] {
        let first = dir.path().join("first.json");
        let second = dir.path().join("second.json");
        gen(kind, seed, &first);
        gen(kind, seed, &second);
        ok &= std::fs::read(&first).unwrap() == std::fs::read(&second).unwrap();

        let loaded = bitensor::files::read_state(&first).unwrap();
        let rewritten = dir.path().join("rewritten.json");
        bitensor::files::write_state(&rewritten, &loaded).unwrap();
        ok &= std::fs::read(&first).unwrap() == std::fs::read(&rewritten).unwrap();

        let reloaded = bitensor::files::read_state(&rewritten).unwrap();
        worst = worst.max(reloaded.coefficients().max_diff(loaded.coefficients()));
    }
    ok &= worst <= 1e-15;
    report(
        "criterion 7, file round trips and per-seed determinism",
        ok,
        &format!("5 state kinds byte-identical, reread deviation {worst:.1e}"),
        start.elapsed(),
        Duration::from_secs(10),
    );
}
