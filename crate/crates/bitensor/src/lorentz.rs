//! Finite Lorentz transformations in the spinor and vector representations.
//!
//! A transformation is parameterized by a real antisymmetric matrix omega.
//! The spinor representation is S = exp((1/2) sum_{rho sigma} omega_{rho
//! sigma} S^{rho sigma}); the corresponding vector representation Lambda is
//! extracted from the defining relation
//!
//!   S^{-1} gamma^mu S = sum_nu Lambda^mu_nu gamma^nu
//!
//! by tracing against the lowered gammas: Lambda^mu_nu = (1/4) tr[S^{-1}
//! gamma^mu S gamma_nu]. Parity acts on spinors as gamma^0 and time reversal
//! as psi -> C conj(psi); only the single-particle time reversal is exposed.
//!
//! The matrix exponential is scaling-and-squaring with a truncated Taylor
//! series: halve the argument until its largest entry is at most 1/2, sum
//! terms until one falls below 1e-16 in max norm, then square back up. On
//! 4x4 inputs this is accurate to machine precision and easy to reproduce.

use crate::clifford::{charge_conjugation, gamma_lower, gammas, generator, metric, GeneratorIndex};
use crate::error::Error;
use crate::matrix::{Mat4c, Mat4r};
use crate::states::Spinor;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Largest allowed magnitude for an omega entry.
pub const OMEGA_BOUND: f64 = 10.0;

/// Real antisymmetric transformation parameters omega_{rho sigma}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaParams {
    m: [[f64; 4]; 4],
}

impl OmegaParams {
    pub fn zero() -> Self {
        OmegaParams { m: [[0.0; 4]; 4] }
    }

    /// Validates antisymmetry, finiteness, and the default magnitude bound.
    pub fn new(entries: [[f64; 4]; 4]) -> Result<Self, Error> {
        Self::with_bound(entries, OMEGA_BOUND)
    }

    /// Same as [`OmegaParams::new`] with a caller-chosen magnitude bound.
    pub fn with_bound(entries: [[f64; 4]; 4], bound: f64) -> Result<Self, Error> {
        for r in 0..4 {
            for c in 0..4 {
                let v = entries[r][c];
                if !v.is_finite() {
                    return Err(Error::NonFinite("omega"));
                }
                if v.abs() > bound {
                    return Err(Error::OmegaOutOfBounds {
                        row: r,
                        col: c,
                        value: v,
                        bound,
                    });
                }
            }
        }
        for r in 0..4 {
            for c in r..4 {
                if entries[r][c] != -entries[c][r] {
                    return Err(Error::NotAntisymmetric(r, c));
                }
            }
        }
        Ok(OmegaParams { m: entries })
    }

    /// Builds omega from its six independent components
    /// [w01, w02, w03, w12, w13, w23]; the lower triangle is the negation.
    pub fn from_upper(upper: [f64; 6]) -> Result<Self, Error> {
        let [w01, w02, w03, w12, w13, w23] = upper;
        let mut m = [[0.0; 4]; 4];
        for (k, idx) in GeneratorIndex::upper_pairs().iter().enumerate() {
            m[idx.rho()][idx.sigma()] = [w01, w02, w03, w12, w13, w23][k];
            m[idx.sigma()][idx.rho()] = -[w01, w02, w03, w12, w13, w23][k];
        }
        Self::new(m)
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn upper(&self) -> [f64; 6] {
        [
            self.m[0][1],
            self.m[0][2],
            self.m[0][3],
            self.m[1][2],
            self.m[1][3],
            self.m[2][3],
        ]
    }

    pub fn negated(&self) -> Self {
        let mut m = self.m;
        for row in &mut m {
            for v in row {
                *v = -*v;
            }
        }
        OmegaParams { m }
    }

    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }
}

/// How a spinor transformation was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    ProperOrthochronous,
    Parity,
    Composite,
}

/// A finite transformation acting on spinor indices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorTransform {
    matrix: Mat4c,
    kind: TransformKind,
}

impl SpinorTransform {
    pub fn identity() -> Self {
        SpinorTransform {
            matrix: Mat4c::identity(),
            kind: TransformKind::ProperOrthochronous,
        }
    }

    pub fn matrix(&self) -> &Mat4c {
        &self.matrix
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    /// self applied after `first` (matrix product self * first).
    pub fn compose(&self, first: &SpinorTransform) -> SpinorTransform {
        use TransformKind::ProperOrthochronous as Proper;
        let kind = if self.kind == Proper && first.kind == Proper {
            Proper
        } else {
            TransformKind::Composite
        };
        SpinorTransform {
            matrix: self.matrix * first.matrix,
            kind,
        }
    }
}

/// The corresponding transformation acting on vector indices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VectorTransform {
    matrix: Mat4r,
}

impl VectorTransform {
    pub fn identity() -> Self {
        VectorTransform {
            matrix: Mat4r::identity(),
        }
    }

    pub fn matrix(&self) -> &Mat4r {
        &self.matrix
    }

    /// Largest deviation of Lambda^T g Lambda from g.
    pub fn metric_residual(&self) -> f64 {
        let g = metric();
        (self.matrix.transpose() * g * self.matrix).max_diff(&g)
    }

    pub fn preserves_metric(&self, tol: f64) -> bool {
        self.metric_residual() <= tol
    }

    pub fn is_proper(&self, tol: f64) -> bool {
        (self.matrix.determinant() - 1.0).abs() <= tol
    }

    pub fn is_orthochronous(&self) -> bool {
        self.matrix[(0, 0)] > 0.0
    }
}

/// exp(a) by scaling-and-squaring with a truncated Taylor series.
fn expm(a: &Mat4c) -> Result<Mat4c, Error> {
    let mut squarings = 0u32;
    let mut norm = a.max_abs();
    if !norm.is_finite() {
        return Err(Error::NonFinite("matrix exponential argument"));
    }
    while norm > 0.5 {
        norm /= 2.0;
        squarings += 1;
    }
    let b = a.scale(2f64.powi(-(squarings as i32)));
    let mut sum = Mat4c::identity();
    let mut term = Mat4c::identity();
    let mut converged = false;
    for k in 1..=64u32 {
        term = (term * b).scale(1.0 / f64::from(k));
        sum = sum + term;
        if term.max_abs() < 1e-16 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ExpNotConverged);
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    Ok(sum)
}

/// The generator combination (1/2) sum omega_{rho sigma} S^{rho sigma}; with
/// both factors antisymmetric this is the plain sum over rho < sigma.
fn algebra_element(omega: &OmegaParams) -> Mat4c {
    let mut acc = Mat4c::zero();
    for idx in GeneratorIndex::upper_pairs() {
        let w = omega.entries()[idx.rho()][idx.sigma()];
        if w != 0.0 {
            acc = acc + generator(idx).scale(w);
        }
    }
    acc
}

/// Finite spinor-representation transformation S(omega).
pub fn spinor_transform(omega: &OmegaParams) -> Result<SpinorTransform, Error> {
    Ok(SpinorTransform {
        matrix: expm(&algebra_element(omega))?,
        kind: TransformKind::ProperOrthochronous,
    })
}

/// Finite vector-representation transformation Lambda(omega), extracted from
/// the spinor representation by tracing the defining relation.
pub fn vector_transform(omega: &OmegaParams) -> Result<VectorTransform, Error> {
    let s = spinor_transform(omega)?;
    let s_inv = expm(&(-algebra_element(omega)))?;
    Ok(vector_from_spinor(&s, &s_inv))
}

fn vector_from_spinor(s: &SpinorTransform, s_inv: &Mat4c) -> VectorTransform {
    let mut lam = Mat4r::zero();
    for mu in 0..4 {
        let conjugated = *s_inv * gammas()[mu] * *s.matrix();
        for nu in 0..4 {
            let lowered = gamma_lower(nu).expect("nu in range");
            lam[(mu, nu)] = 0.25 * conjugated.trace_of_product(&lowered).re;
        }
    }
    VectorTransform { matrix: lam }
}

/// Parity in the spinor representation: S(P) = gamma^0.
pub fn parity_spinor() -> SpinorTransform {
    SpinorTransform {
        matrix: gammas()[0],
        kind: TransformKind::Parity,
    }
}

/// Single-particle time reversal, psi -> C conj(psi). Antiunitary, so it is
/// exposed as an action on spinors rather than as a matrix.
pub fn time_reversal_spinor(psi: &Spinor) -> Spinor {
    let mut conj = *psi.components();
    for z in &mut conj {
        *z = z.conj();
    }
    let flipped = charge_conjugation().mul_vec(&conj);
    Spinor::new(flipped).expect("charge conjugation preserves nonzero spinors")
}

/// Draws antisymmetric omega with i.i.d. entries uniform in [-scale, scale]
/// and returns the parameters with both finite representations. The draw is
/// deterministic per seed; scale 0 yields the identity in both
/// representations.
pub fn random_proper_transform(
    seed: u64,
    scale: f64,
) -> Result<(OmegaParams, SpinorTransform, VectorTransform), Error> {
    if !scale.is_finite() || !(0.0..=OMEGA_BOUND).contains(&scale) {
        return Err(Error::InvalidScale {
            got: scale,
            max: OMEGA_BOUND,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut upper = [0.0f64; 6];
    for w in &mut upper {
        *w = (rng.random::<f64>() * 2.0 - 1.0) * scale;
    }
    let omega = OmegaParams::from_upper(upper)?;
    let s = spinor_transform(&omega)?;
    let s_inv = expm(&(-algebra_element(&omega)))?;
    Ok((omega, s, vector_from_spinor(&s, &s_inv)))
}

/// Largest entry of S^{-1} gamma^mu S - sum_nu Lambda^mu_nu gamma^nu over all
/// mu, with S^{-1} computed by Gaussian elimination so the check does not
/// share a code path with the exponential that produced S.
pub fn representation_residual(s: &SpinorTransform, lam: &VectorTransform) -> f64 {
    let s_inv = s
        .matrix()
        .inverse()
        .expect("spinor transformations are invertible");
    let g = gammas();
    let mut worst = 0.0f64;
    for mu in 0..4 {
        let lhs = s_inv * g[mu] * *s.matrix();
        let mut rhs = Mat4c::zero();
        for nu in 0..4 {
            rhs = rhs + g[nu].scale(lam.matrix()[(mu, nu)]);
        }
        worst = worst.max(lhs.max_diff(&rhs));
    }
    worst
}
