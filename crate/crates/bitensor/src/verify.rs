//! Randomized verification suites with printable pass/fail summaries.
//!
//! Four suites cover the algebraic layer (exact), the two Lorentz
//! representations and covariance of the nine quantities (randomized), the
//! 36 linear identities against the minor table (randomized), and the
//! product-state equivalence (randomized classification). Each returns a
//! [`SuiteOutcome`] so callers can aggregate or print one line per suite.

use crate::bitensors::{compute_all, parity_action, Lab};
use crate::clifford::{charge_conjugation, gamma5, gammas, generator, GeneratorIndex, METRIC_DIAG};
use crate::detect::{decide, identities_residual};
use crate::error::Error;
use crate::lorentz::{
    parity_spinor, random_proper_transform, representation_residual, spinor_transform,
    SpinorTransform,
};
use crate::matrix::Mat4c;
use crate::states::random_state;
use std::fmt;

/// Gamma-index transformation residual bound, Lorentz group checks.
pub const REPRESENTATION_TOL: f64 = 1e-10;
/// Bound on |S^T C S - C| for proper orthochronous S.
pub const INTERTWINER_TOL: f64 = 1e-10;
/// Bound on the gamma5 commutator with proper orthochronous S.
pub const GAMMA5_COMMUTE_TOL: f64 = 1e-12;
/// Bound on |Lambda^T g Lambda - g|.
pub const METRIC_TOL: f64 = 1e-10;
/// Bound on |S(omega) S(-omega) - 1|.
pub const GROUP_INVERSE_TOL: f64 = 1e-10;
/// Bound on each of the 36 identity residuals on unit-norm states.
pub const IDENTITY_SUITE_TOL: f64 = 1e-12;
/// Relative covariance tolerance, measured against the larger max component
/// magnitude of the compared sets.
pub const COVARIANCE_REL_TOL: f64 = 1e-9;
/// Absolute floor for the covariance comparison near all-zero sets.
pub const COVARIANCE_ABS_FLOOR: f64 = 1e-12;

/// Summary of one verification suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
    pub worst_residual: f64,
    pub passed: bool,
}

impl SuiteOutcome {
    fn new(suite: &'static str, trials: usize) -> Self {
        SuiteOutcome {
            suite,
            trials,
            checks: 0,
            failures: 0,
            worst_residual: 0.0,
            passed: false,
        }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn record(&mut self, residual: f64, tol: f64) {
        self.checks += 1;
        self.worst_residual = self.worst_residual.max(residual);
        // A NaN residual must fail, so test the passing direction.
        if !(residual <= tol) {
            self.failures += 1;
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.failures == 0;
        self
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: trials={} checks={} failures={} worst_residual={:.3e} {}",
            self.suite,
            self.trials,
            self.checks,
            self.failures,
            self.worst_residual,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// SplitMix-style mixer keeping per-trial seed streams disjoint.
fn derive_seed(seed: u64, stream: u64, trial: u64) -> u64 {
    let mut z = seed
        ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ trial.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Exact checks on the matrix algebra: anticommutators for all 16 index
/// pairs, the transpose intertwining relation and gamma5 anticommutation for
/// every index, symmetry and self-inverse properties of both special
/// matrices, the gamma5 product formula, and the generator transpose
/// relation. Entries are Gaussian integers (generators quarter-integers), so
/// every residual is exactly zero.
pub fn algebra() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("algebra", 1);
    let g = gammas();
    let c = charge_conjugation();
    let g5 = gamma5();
    let id = Mat4c::identity();

    for mu in 0..4 {
        for nu in 0..4 {
            let anti = g[mu] * g[nu] + g[nu] * g[mu];
            let expected = if mu == nu {
                id.scale(2.0 * METRIC_DIAG[mu])
            } else {
                Mat4c::zero()
            };
            out.record(anti.max_diff(&expected), 0.0);
        }
    }
    for gm in g {
        out.record((c * gm).max_diff(&(gm.transpose() * c)), 0.0);
        out.record((g5 * gm + gm * g5).max_diff(&Mat4c::zero()), 0.0);
    }
    out.record(c.transpose().max_diff(&-c), 0.0);
    out.record((c * c).max_diff(&id), 0.0);
    out.record(g5.transpose().max_diff(&g5), 0.0);
    out.record((g5 * g5).max_diff(&id), 0.0);
    let product = (g[0] * g[1] * g[2] * g[3]) * crate::matrix::C_I;
    out.record(product.max_diff(&g5), 0.0);
    for idx in GeneratorIndex::upper_pairs() {
        let s = generator(idx);
        out.record((s.transpose() * c).max_diff(&-(c * s)), 0.0);
    }
    out.finish()
}

/// Randomized transformation checks. Per trial, for fresh parameters in both
/// labs at the given scale: the gamma-index transformation law, the
/// transpose intertwiner, the gamma5 commutator, the group inverse, metric
/// preservation, predicted-versus-recomputed covariance of all 36
/// components on a random state, and the parity sign table (exact).
pub fn covariance(trials: usize, seed: u64, scale: f64) -> Result<SuiteOutcome, Error> {
    let mut out = SuiteOutcome::new("covariance", trials);
    let c = charge_conjugation();
    let g5 = gamma5();
    let id = Mat4c::identity();
    let parity = parity_spinor();
    let identity = SpinorTransform::identity();

    for t in 0..trials as u64 {
        let (omega_a, s_a, lam_a) = random_proper_transform(derive_seed(seed, 1, t), scale)?;
        let (_, s_b, lam_b) = random_proper_transform(derive_seed(seed, 2, t), scale)?;

        for (s, lam) in [(&s_a, &lam_a), (&s_b, &lam_b)] {
            out.record(representation_residual(s, lam), REPRESENTATION_TOL);
            let m = s.matrix();
            out.record((m.transpose() * c * *m).max_diff(&c), INTERTWINER_TOL);
            out.record((*m * g5).max_diff(&(g5 * *m)), GAMMA5_COMMUTE_TOL);
            out.record(lam.metric_residual(), METRIC_TOL);
        }
        let s_back = spinor_transform(&omega_a.negated())?;
        out.record(
            (*s_back.matrix() * *s_a.matrix()).max_diff(&id),
            GROUP_INVERSE_TOL,
        );

        let rank = 1 + (t as usize % 4);
        let state = random_state(derive_seed(seed, 3, t), rank)?;
        let set = compute_all(&state);
        let predicted = set.transformed(&lam_a, &lam_b);
        let recomputed = compute_all(&state.apply_local(&s_a, &s_b));
        let magnitude = set.max_abs().max(recomputed.max_abs());
        let tol = (COVARIANCE_REL_TOL * magnitude).max(COVARIANCE_ABS_FLOOR);
        out.record(predicted.max_diff(&recomputed), tol);

        let direct_a = compute_all(&state.apply_local(&parity, &identity));
        out.record(parity_action(&set, Lab::A).max_diff(&direct_a), 0.0);
        let direct_b = compute_all(&state.apply_local(&identity, &parity));
        out.record(parity_action(&set, Lab::B).max_diff(&direct_b), 0.0);
    }
    Ok(out.finish())
}

/// The 36 linear combinations against the directly computed minors, on
/// unit-norm random states of every rank.
pub fn identities(trials_per_rank: usize, seed: u64) -> Result<SuiteOutcome, Error> {
    let mut out = SuiteOutcome::new("identities", 4 * trials_per_rank);
    for rank in 1..=4usize {
        for t in 0..trials_per_rank as u64 {
            let state = random_state(derive_seed(seed, rank as u64, t), rank)?;
            out.record(identities_residual(&state), IDENTITY_SUITE_TOL);
        }
    }
    Ok(out.finish())
}

/// Classification equivalence: every random rank-1 state must decide as a
/// product, every random rank-2/3/4 state as entangled, at the given
/// tolerance. The worst residual reported is the largest indicator seen on
/// rank-1 states.
pub fn theorem(trials_per_rank: usize, seed: u64, tol: f64) -> Result<SuiteOutcome, Error> {
    let mut out = SuiteOutcome::new("theorem", 4 * trials_per_rank);
    for rank in 1..=4usize {
        for t in 0..trials_per_rank as u64 {
            let state = random_state(derive_seed(seed, 16 + rank as u64, t), rank)?;
            let verdict = decide(&state, tol)?;
            out.checks += 1;
            if rank == 1 {
                out.worst_residual = out.worst_residual.max(verdict.max_indicator);
                if !verdict.is_product {
                    out.failures += 1;
                }
            } else if verdict.is_product {
                out.failures += 1;
            }
        }
    }
    Ok(out.finish())
}
