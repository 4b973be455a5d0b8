//! Spinors and two-particle states.
//!
//! A two-particle state held by observers A and B is a 4x4 complex
//! coefficient matrix psi: row index = A's spinor component, column index =
//! B's. Local transformations act as psi -> S_A psi S_B^T, so B's matrix
//! enters in transposed form from the right.

use crate::error::Error;
use crate::lorentz::SpinorTransform;
use crate::matrix::{Mat4c, C_ONE, C_ZERO};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

/// Redraw threshold: a requested rank r is accepted when sigma_r / sigma_1
/// clears this floor on the unit-normalized draw.
const RANK_RATIO_FLOOR: f64 = 1e-6;

/// A single Dirac spinor: four complex components, not all zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    c: [Complex64; 4],
}

impl Spinor {
    pub fn new(components: [Complex64; 4]) -> Result<Self, Error> {
        if components
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("spinor components"));
        }
        if components.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
            return Err(Error::ZeroSpinor);
        }
        Ok(Spinor { c: components })
    }

    /// The j-th standard basis spinor.
    pub fn basis(j: usize) -> Result<Self, Error> {
        if j > 3 {
            return Err(Error::IndexOutOfRange(j));
        }
        let mut c = [C_ZERO; 4];
        c[j] = C_ONE;
        Ok(Spinor { c })
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.c
    }

    pub fn norm(&self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, factor: Complex64) -> Result<Self, Error> {
        Spinor::new(self.c.map(|z| z * factor))
    }

    /// S psi on the spinor index.
    pub fn transformed(&self, s: &SpinorTransform) -> Self {
        Spinor {
            c: s.matrix().mul_vec(&self.c),
        }
    }
}

/// A two-particle state: a nonzero 4x4 complex coefficient matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoParticleState {
    psi: Mat4c,
}

impl TwoParticleState {
    /// Wraps a coefficient matrix; all-zero or non-finite input is a domain
    /// error.
    pub fn from_coefficients(psi: Mat4c) -> Result<Self, Error> {
        if !psi.is_finite() {
            return Err(Error::NonFinite("state coefficients"));
        }
        if psi.max_abs() == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(TwoParticleState { psi })
    }

    /// The product state a (x) b, with coefficients a_j b_k.
    pub fn product(a: &Spinor, b: &Spinor) -> Self {
        let mut psi = Mat4c::zero();
        for j in 0..4 {
            for k in 0..4 {
                psi[(j, k)] = a.components()[j] * b.components()[k];
            }
        }
        TwoParticleState { psi }
    }

    pub fn coefficients(&self) -> &Mat4c {
        &self.psi
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.psi.frobenius_norm()
    }

    /// psi -> S_A psi S_B^T.
    pub fn apply_local(&self, s_a: &SpinorTransform, s_b: &SpinorTransform) -> Self {
        TwoParticleState {
            psi: *s_a.matrix() * self.psi * s_b.matrix().transpose(),
        }
    }

    /// The same state scaled to unit Frobenius norm.
    pub fn normalized(&self) -> Self {
        TwoParticleState {
            psi: self.psi.scale(1.0 / self.psi.frobenius_norm()),
        }
    }

    pub fn singular_values(&self) -> [f64; 4] {
        self.psi.singular_values()
    }
}

fn random_spinor_components(rng: &mut ChaCha12Rng) -> [Complex64; 4] {
    let mut c = [C_ZERO; 4];
    for z in &mut c {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        *z = Complex64::new(re, im);
    }
    c
}

/// A random unit-norm state of the requested Schmidt rank (1..=4), built as a
/// sum of `rank` outer products of standard-normal spinors. Deterministic per
/// seed; draws that land numerically below the requested rank are redrawn.
pub fn random_state(seed: u64, rank: usize) -> Result<TwoParticleState, Error> {
    if !(1..=4).contains(&rank) {
        return Err(Error::InvalidRank(rank));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    loop {
        let mut psi = Mat4c::zero();
        for _ in 0..rank {
            let a = random_spinor_components(&mut rng);
            let b = random_spinor_components(&mut rng);
            for j in 0..4 {
                for k in 0..4 {
                    psi[(j, k)] += a[j] * b[k];
                }
            }
        }
        let norm = psi.frobenius_norm();
        if norm == 0.0 {
            continue;
        }
        let psi = psi.scale(1.0 / norm);
        let sv = psi.singular_values();
        if sv[rank - 1] / sv[0] >= RANK_RATIO_FLOOR {
            return Ok(TwoParticleState { psi });
        }
    }
}
