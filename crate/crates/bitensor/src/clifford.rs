//! The Dirac matrix algebra in the Dirac basis.
//!
//! Metric signature (+,-,-,-). The four gamma matrices satisfy the Clifford
//! relation gamma^mu gamma^nu + gamma^nu gamma^mu = 2 g^{mu nu} I. On top of
//! them sit the charge conjugation matrix C = i gamma^1 gamma^3 (antisymmetric
//! and self-inverse, with C gamma^mu = (gamma^mu)^T C), the chirality matrix
//! gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 (symmetric, self-inverse,
//! anticommuting with every gamma^mu), and the spinor-representation
//! generators S^{rho sigma} = (1/4)[gamma^rho, gamma^sigma].
//!
//! Every entry here is a Gaussian integer or half-integer, so all the algebra
//! tests below assert exact equality: products of these matrices round-trip
//! through f64 without error.

use crate::error::Error;
use crate::matrix::{Mat4c, C_I, C_ONE, C_ZERO};

/// Diagonal of the metric tensor g^{mu nu} = diag(+1, -1, -1, -1).
pub const METRIC_DIAG: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// The metric as a real matrix.
pub fn metric() -> crate::matrix::Mat4r {
    crate::matrix::Mat4r::diag(METRIC_DIAG)
}

const C_M1: num_complex::Complex64 = num_complex::Complex64::new(-1.0, 0.0);
const C_MI: num_complex::Complex64 = num_complex::Complex64::new(0.0, -1.0);

const GAMMA0: Mat4c = Mat4c::from_rows([
    [C_ONE, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ONE, C_ZERO, C_ZERO],
    [C_ZERO, C_ZERO, C_M1, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_M1],
]);

const GAMMA1: Mat4c = Mat4c::from_rows([
    [C_ZERO, C_ZERO, C_ZERO, C_ONE],
    [C_ZERO, C_ZERO, C_ONE, C_ZERO],
    [C_ZERO, C_M1, C_ZERO, C_ZERO],
    [C_M1, C_ZERO, C_ZERO, C_ZERO],
]);

const GAMMA2: Mat4c = Mat4c::from_rows([
    [C_ZERO, C_ZERO, C_ZERO, C_MI],
    [C_ZERO, C_ZERO, C_I, C_ZERO],
    [C_ZERO, C_I, C_ZERO, C_ZERO],
    [C_MI, C_ZERO, C_ZERO, C_ZERO],
]);

const GAMMA3: Mat4c = Mat4c::from_rows([
    [C_ZERO, C_ZERO, C_ONE, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_M1],
    [C_M1, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ONE, C_ZERO, C_ZERO],
]);

/// C = i gamma^1 gamma^3 = block-diag(-sigma_2, -sigma_2).
const CHARGE_CONJ: Mat4c = Mat4c::from_rows([
    [C_ZERO, C_I, C_ZERO, C_ZERO],
    [C_MI, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_I],
    [C_ZERO, C_ZERO, C_MI, C_ZERO],
]);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.
const GAMMA5: Mat4c = Mat4c::from_rows([
    [C_ZERO, C_ZERO, C_ONE, C_ZERO],
    [C_ZERO, C_ZERO, C_ZERO, C_ONE],
    [C_ONE, C_ZERO, C_ZERO, C_ZERO],
    [C_ZERO, C_ONE, C_ZERO, C_ZERO],
]);

/// gamma^mu for mu in 0..=3; any other index is a domain error.
pub fn gamma(mu: usize) -> Result<Mat4c, Error> {
    match mu {
        0 => Ok(GAMMA0),
        1 => Ok(GAMMA1),
        2 => Ok(GAMMA2),
        3 => Ok(GAMMA3),
        _ => Err(Error::IndexOutOfRange(mu)),
    }
}

/// All four gamma matrices, indexed by mu.
pub fn gammas() -> [Mat4c; 4] {
    [GAMMA0, GAMMA1, GAMMA2, GAMMA3]
}

/// gamma_mu = g_{mu mu} gamma^mu (no sum): the index-lowered matrix.
pub fn gamma_lower(mu: usize) -> Result<Mat4c, Error> {
    Ok(gamma(mu)?.scale(METRIC_DIAG[mu]))
}

/// The charge conjugation matrix C.
pub fn charge_conjugation() -> Mat4c {
    CHARGE_CONJ
}

/// The chirality matrix gamma^5.
pub fn gamma5() -> Mat4c {
    GAMMA5
}

/// An antisymmetric index pair (rho, sigma) labelling a Lie algebra
/// generator. rho = sigma does not label a generator and is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorIndex {
    rho: usize,
    sigma: usize,
}

impl GeneratorIndex {
    pub fn new(rho: usize, sigma: usize) -> Result<Self, Error> {
        if rho > 3 {
            return Err(Error::IndexOutOfRange(rho));
        }
        if sigma > 3 {
            return Err(Error::IndexOutOfRange(sigma));
        }
        if rho == sigma {
            return Err(Error::EqualGeneratorIndices(rho));
        }
        Ok(GeneratorIndex { rho, sigma })
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// The six index pairs with rho < sigma, enough to span the algebra.
    pub fn upper_pairs() -> [GeneratorIndex; 6] {
        [
            GeneratorIndex { rho: 0, sigma: 1 },
            GeneratorIndex { rho: 0, sigma: 2 },
            GeneratorIndex { rho: 0, sigma: 3 },
            GeneratorIndex { rho: 1, sigma: 2 },
            GeneratorIndex { rho: 1, sigma: 3 },
            GeneratorIndex { rho: 2, sigma: 3 },
        ]
    }
}

/// S^{rho sigma} = (1/4)[gamma^rho, gamma^sigma].
///
/// Entries are exact multiples of 1/2, so downstream algebra on the
/// generators stays exact in f64.
pub fn generator(idx: GeneratorIndex) -> Mat4c {
    let g = gammas();
    let (r, s) = (idx.rho, idx.sigma);
    (g[r] * g[s] - g[s] * g[r]).scale(0.25)
}
