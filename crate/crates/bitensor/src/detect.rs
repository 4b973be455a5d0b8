//! Product-state detection.
//!
//! A state is a product state exactly when its coefficient matrix has rank
//! one, i.e. when all 36 two-by-two subdeterminants vanish. Each of those
//! minors equals a specific linear combination of at most four components of
//! the nine covariant quantities, with coefficients in {1, -1, i, -i} and an
//! overall factor 1/4. The combinations come in six blocks of six, one block
//! per unordered row pair of the coefficient matrix. [`identities_residual`]
//! evaluates every combination against the directly computed minor;
//! [`decide`] classifies a state by the largest component magnitude on the
//! unit-normalized state.
//!
//! The singular value ratio sigma_2/sigma_1 ([`nearest_rank_one_gap`]) is a
//! diagnostic companion: the minor table, not the ratio, is the normative
//! rank-one criterion.

use crate::bitensors::{compute_all, BitensorSet};
use crate::error::Error;
#[cfg(test)]
use crate::matrix::Mat4c;
use crate::states::TwoParticleState;
use num_complex::Complex64;
use std::sync::OnceLock;

/// Default decision tolerance on the largest component magnitude.
pub const DEFAULT_DECISION_TOL: f64 = 1e-9;

/// The six unordered index pairs, in lexicographic order. Minor tables are
/// indexed by (row-pair, column-pair) positions in this list.
pub const INDEX_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Position of an unordered pair in [`INDEX_PAIRS`].
pub fn pair_index(a: usize, b: usize) -> Option<usize> {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    INDEX_PAIRS.iter().position(|&p| p == (lo, hi))
}

/// All 36 two-by-two subdeterminants of a coefficient matrix, indexed by
/// (row-pair, column-pair).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinorTable {
    m: [[Complex64; 6]; 6],
}

impl MinorTable {
    /// Entry by pair positions (see [`INDEX_PAIRS`]).
    pub fn entry(&self, row_pair: usize, col_pair: usize) -> Complex64 {
        self.m[row_pair][col_pair]
    }

    /// det of the submatrix with rows {j, jp} and columns {k, kp}.
    pub fn minor(&self, j: usize, jp: usize, k: usize, kp: usize) -> Option<Complex64> {
        Some(self.m[pair_index(j, jp)?][pair_index(k, kp)?])
    }

    pub fn rows(&self) -> &[[Complex64; 6]; 6] {
        &self.m
    }

    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .fold(0.0f64, |acc, z| acc.max(z.norm()))
    }
}

/// Evaluates psi_{jk} psi_{j'k'} - psi_{jk'} psi_{j'k} for every j < j',
/// k < k'.
pub fn minor_table(state: &TwoParticleState) -> MinorTable {
    let psi = state.coefficients();
    let mut m = [[Complex64::new(0.0, 0.0); 6]; 6];
    for (ri, &(j, jp)) in INDEX_PAIRS.iter().enumerate() {
        for (ci, &(k, kp)) in INDEX_PAIRS.iter().enumerate() {
            m[ri][ci] = psi[(j, k)] * psi[(jp, kp)] - psi[(j, kp)] * psi[(jp, k)];
        }
    }
    MinorTable { m }
}

/// One component slot of the nine covariant quantities. Variant names
/// mirror the component labels.
#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    I1,
    I2,
    I2A,
    I2B,
    KA(usize),
    KB(usize),
    LA(usize),
    LB(usize),
    KAB(usize, usize),
}

fn slot_value(set: &BitensorSet, slot: Slot) -> Complex64 {
    match slot {
        Slot::I1 => set.i1,
        Slot::I2 => set.i2,
        Slot::I2A => set.i2a,
        Slot::I2B => set.i2b,
        Slot::KA(mu) => set.ka[mu],
        Slot::KB(mu) => set.kb[mu],
        Slot::LA(mu) => set.la[mu],
        Slot::LB(mu) => set.lb[mu],
        Slot::KAB(mu, nu) => set.kab[mu][nu],
    }
}

/// One of the 36 linear identities: (1/4) sum of four signed slots equals
/// psi_{ab} psi_{cd} - psi_{ef} psi_{gh}, which is (up to sign) one canonical
/// minor.
#[derive(Clone, Copy, Debug)]
struct MinorIdentity {
    /// Row pair the block is stated for. Audited by tests against the
    /// canonical form; construction-time assertions consume it too.
    #[cfg_attr(not(test), allow(dead_code))]
    row_pair: (usize, usize),
    terms: [(Complex64, Slot); 4],
    /// [(a,b), (c,d), (e,f), (g,h)] meaning psi_ab psi_cd - psi_ef psi_gh,
    /// transcribed as printed. Audited by tests.
    #[cfg_attr(not(test), allow(dead_code))]
    rhs: [(usize, usize); 4],
    /// Derived location of the canonical minor and the sign relating the
    /// printed right-hand side to it.
    row_pair_idx: usize,
    col_pair_idx: usize,
    sign: f64,
}

impl MinorIdentity {
    fn lhs(&self, set: &BitensorSet) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (coeff, slot) in self.terms {
            acc += coeff * slot_value(set, slot);
        }
        acc * 0.25
    }

    #[cfg(test)]
    fn rhs_value(&self, psi: &Mat4c) -> Complex64 {
        let [(a, b), (c, d), (e, f), (g, h)] = self.rhs;
        psi[(a, b)] * psi[(c, d)] - psi[(e, f)] * psi[(g, h)]
    }
}

/// Resolves a printed right-hand side to its canonical minor: which (row
/// pair, column pair) submatrix it is the determinant of, and with which
/// sign. Panics at table construction if a transcribed line is not a valid
/// two-by-two determinant over the claimed rows.
fn canonicalize(row_pair: (usize, usize), rhs: [(usize, usize); 4]) -> (usize, usize, f64) {
    let sorted2 = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
    let [p, q, r, s] = rhs;
    let rows_first = sorted2(p.0, q.0);
    let rows_second = sorted2(r.0, s.0);
    let cols_first = sorted2(p.1, q.1);
    let cols_second = sorted2(r.1, s.1);
    assert_eq!(rows_first, rows_second, "products span different rows");
    assert_eq!(cols_first, cols_second, "products span different columns");
    assert_eq!(
        rows_first,
        sorted2(row_pair.0, row_pair.1),
        "block row claim does not match the printed products"
    );
    let (j, jp) = rows_first;
    let (k, kp) = cols_first;
    assert!(j < jp && k < kp, "degenerate index pair");

    let as_set = |x: (usize, usize), y: (usize, usize)| {
        let mut v = [x, y];
        v.sort_unstable();
        v
    };
    let positive = as_set((j, k), (jp, kp));
    let negative = as_set((j, kp), (jp, k));
    let first = as_set(p, q);
    let second = as_set(r, s);
    let sign = if first == positive && second == negative {
        1.0
    } else if first == negative && second == positive {
        -1.0
    } else {
        panic!("printed products do not form the claimed minor");
    };
    (
        pair_index(j, jp).expect("valid row pair"),
        pair_index(k, kp).expect("valid column pair"),
        sign,
    )
}

fn identity_table() -> &'static [MinorIdentity; 36] {
    static TABLE: OnceLock<[MinorIdentity; 36]> = OnceLock::new();
    TABLE.get_or_init(|| {
        use Slot::*;
        let one = Complex64::new(1.0, 0.0);
        let neg = Complex64::new(-1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let ni = Complex64::new(0.0, -1.0);

        let mut table = Vec::with_capacity(36);
        let mut line =
            |row_pair: (usize, usize), terms: [(Complex64, Slot); 4], rhs: [(usize, usize); 4]| {
                let (row_pair_idx, col_pair_idx, sign) = canonicalize(row_pair, rhs);
                table.push(MinorIdentity {
                    row_pair,
                    terms,
                    rhs,
                    row_pair_idx,
                    col_pair_idx,
                    sign,
                });
            };

        // Rows 0 and 1.
        line(
            (0, 1),
            [(one, KB(1)), (ni, KB(2)), (one, KAB(0, 1)), (ni, KAB(0, 2))],
            [(0, 0), (1, 2), (0, 2), (1, 0)],
        );
        line(
            (0, 1),
            [(one, KB(1)), (i, KB(2)), (one, KAB(0, 1)), (i, KAB(0, 2))],
            [(0, 3), (1, 1), (0, 1), (1, 3)],
        );
        line(
            (0, 1),
            [(one, I1), (one, KA(0)), (one, KB(0)), (one, KAB(0, 0))],
            [(0, 0), (1, 1), (0, 1), (1, 0)],
        );
        line(
            (0, 1),
            [(one, I1), (one, KA(0)), (neg, KB(0)), (neg, KAB(0, 0))],
            [(0, 2), (1, 3), (0, 3), (1, 2)],
        );
        line(
            (0, 1),
            [(one, I2A), (one, LA(0)), (one, KB(3)), (one, KAB(0, 3))],
            [(0, 2), (1, 1), (1, 2), (0, 1)],
        );
        line(
            (0, 1),
            [(one, I2A), (one, LA(0)), (neg, KB(3)), (neg, KAB(0, 3))],
            [(0, 0), (1, 3), (1, 0), (0, 3)],
        );

        // Rows 0 and 2.
        line(
            (0, 2),
            [
                (one, KAB(1, 1)),
                (ni, KAB(1, 2)),
                (ni, KAB(2, 1)),
                (neg, KAB(2, 2)),
            ],
            [(0, 0), (2, 2), (0, 2), (2, 0)],
        );
        line(
            (0, 2),
            [
                (one, KAB(1, 1)),
                (i, KAB(1, 2)),
                (ni, KAB(2, 1)),
                (one, KAB(2, 2)),
            ],
            [(0, 3), (2, 1), (0, 1), (2, 3)],
        );
        line(
            (0, 2),
            [(one, KA(1)), (ni, KA(2)), (neg, KAB(1, 0)), (i, KAB(2, 0))],
            [(0, 2), (2, 3), (0, 3), (2, 2)],
        );
        line(
            (0, 2),
            [(one, KA(1)), (ni, KA(2)), (one, KAB(1, 0)), (ni, KAB(2, 0))],
            [(0, 0), (2, 1), (0, 1), (2, 0)],
        );
        line(
            (0, 2),
            [(one, LA(1)), (ni, LA(2)), (neg, KAB(1, 3)), (i, KAB(2, 3))],
            [(0, 0), (2, 3), (0, 3), (2, 0)],
        );
        line(
            (0, 2),
            [(one, LA(1)), (ni, LA(2)), (one, KAB(1, 3)), (ni, KAB(2, 3))],
            [(0, 2), (2, 1), (0, 1), (2, 2)],
        );

        // Rows 0 and 3.
        line(
            (0, 3),
            [(one, LB(1)), (ni, LB(2)), (neg, KAB(3, 1)), (i, KAB(3, 2))],
            [(0, 0), (3, 2), (0, 2), (3, 0)],
        );
        line(
            (0, 3),
            [(one, LB(1)), (i, LB(2)), (neg, KAB(3, 1)), (ni, KAB(3, 2))],
            [(0, 3), (3, 1), (0, 1), (3, 3)],
        );
        line(
            (0, 3),
            [(one, I2), (neg, LA(3)), (neg, LB(3)), (one, KAB(3, 3))],
            [(0, 0), (3, 3), (0, 3), (3, 0)],
        );
        line(
            (0, 3),
            [(one, I2), (neg, LA(3)), (one, LB(3)), (neg, KAB(3, 3))],
            [(0, 2), (3, 1), (0, 1), (3, 2)],
        );
        line(
            (0, 3),
            [(one, I2B), (one, LB(0)), (neg, KA(3)), (neg, KAB(3, 0))],
            [(0, 0), (3, 1), (0, 1), (3, 0)],
        );
        line(
            (0, 3),
            [(one, I2B), (neg, LB(0)), (neg, KA(3)), (one, KAB(3, 0))],
            [(0, 2), (3, 3), (0, 3), (3, 2)],
        );

        // Rows 1 and 2.
        line(
            (1, 2),
            [(one, LB(1)), (ni, LB(2)), (one, KAB(3, 1)), (ni, KAB(3, 2))],
            [(2, 0), (1, 2), (2, 2), (1, 0)],
        );
        line(
            (1, 2),
            [(one, LB(1)), (i, LB(2)), (one, KAB(3, 1)), (i, KAB(3, 2))],
            [(2, 3), (1, 1), (2, 1), (1, 3)],
        );
        line(
            (1, 2),
            [(one, I2), (one, LA(3)), (one, LB(3)), (one, KAB(3, 3))],
            [(2, 2), (1, 1), (2, 1), (1, 2)],
        );
        line(
            (1, 2),
            [(one, I2), (one, LA(3)), (neg, LB(3)), (neg, KAB(3, 3))],
            [(2, 0), (1, 3), (2, 3), (1, 0)],
        );
        line(
            (1, 2),
            [(one, I2B), (one, LB(0)), (one, KA(3)), (one, KAB(3, 0))],
            [(2, 0), (1, 1), (2, 1), (1, 0)],
        );
        line(
            (1, 2),
            [(one, I2B), (neg, LB(0)), (one, KA(3)), (neg, KAB(3, 0))],
            [(1, 3), (2, 2), (1, 2), (2, 3)],
        );

        // Rows 1 and 3.
        line(
            (1, 3),
            [
                (one, KAB(1, 1)),
                (ni, KAB(1, 2)),
                (i, KAB(2, 1)),
                (one, KAB(2, 2)),
            ],
            [(1, 2), (3, 0), (1, 0), (3, 2)],
        );
        line(
            (1, 3),
            [
                (one, KAB(1, 1)),
                (i, KAB(1, 2)),
                (i, KAB(2, 1)),
                (neg, KAB(2, 2)),
            ],
            [(1, 1), (3, 3), (1, 3), (3, 1)],
        );
        line(
            (1, 3),
            [(one, KA(1)), (i, KA(2)), (one, KAB(1, 0)), (i, KAB(2, 0))],
            [(1, 1), (3, 0), (1, 0), (3, 1)],
        );
        line(
            (1, 3),
            [(one, KA(1)), (i, KA(2)), (neg, KAB(1, 0)), (ni, KAB(2, 0))],
            [(1, 3), (3, 2), (1, 2), (3, 3)],
        );
        line(
            (1, 3),
            [(one, LA(1)), (i, LA(2)), (one, KAB(1, 3)), (i, KAB(2, 3))],
            [(1, 1), (3, 2), (1, 2), (3, 1)],
        );
        line(
            (1, 3),
            [(one, LA(1)), (i, LA(2)), (neg, KAB(1, 3)), (ni, KAB(2, 3))],
            [(1, 3), (3, 0), (1, 0), (3, 3)],
        );

        // Rows 2 and 3.
        line(
            (2, 3),
            [(one, KB(1)), (ni, KB(2)), (neg, KAB(0, 1)), (i, KAB(0, 2))],
            [(2, 0), (3, 2), (2, 2), (3, 0)],
        );
        line(
            (2, 3),
            [(one, KB(1)), (i, KB(2)), (neg, KAB(0, 1)), (ni, KAB(0, 2))],
            [(2, 3), (3, 1), (2, 1), (3, 3)],
        );
        line(
            (2, 3),
            [(one, I1), (neg, KA(0)), (neg, KB(0)), (one, KAB(0, 0))],
            [(2, 2), (3, 3), (2, 3), (3, 2)],
        );
        line(
            (2, 3),
            [(one, I1), (neg, KA(0)), (one, KB(0)), (neg, KAB(0, 0))],
            [(2, 0), (3, 1), (2, 1), (3, 0)],
        );
        line(
            (2, 3),
            [(one, I2A), (neg, LA(0)), (one, KB(3)), (neg, KAB(0, 3))],
            [(2, 2), (3, 1), (2, 1), (3, 2)],
        );
        line(
            (2, 3),
            [(one, I2A), (neg, LA(0)), (neg, KB(3)), (one, KAB(0, 3))],
            [(2, 0), (3, 3), (3, 0), (2, 3)],
        );

        table
            .try_into()
            .expect("exactly 36 identities are transcribed")
    })
}

/// Largest absolute difference over all 36 identities between the linear
/// combination of covariant components and the directly computed minor.
pub fn identities_residual(state: &TwoParticleState) -> f64 {
    let set = compute_all(state);
    let minors = minor_table(state);
    let mut worst = 0.0f64;
    for ident in identity_table() {
        let lhs = ident.lhs(&set);
        let rhs = minors.entry(ident.row_pair_idx, ident.col_pair_idx) * ident.sign;
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// Outcome of the product-state decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub is_product: bool,
    /// Largest component magnitude over the nine quantities, evaluated on
    /// the unit-normalized state.
    pub max_indicator: f64,
    pub tolerance_used: f64,
}

/// Classifies a state: product when every component of the nine quantities
/// stays below `tol` in magnitude after unit normalization.
pub fn decide(state: &TwoParticleState, tol: f64) -> Result<Verdict, Error> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let max_indicator = compute_all(&state.normalized()).max_abs();
    Ok(Verdict {
        is_product: max_indicator < tol,
        max_indicator,
        tolerance_used: tol,
    })
}

/// sigma_2 / sigma_1 of the coefficient matrix: 0 for exact product states,
/// 1 for a maximally balanced rank >= 2 state. Diagnostic only.
pub fn nearest_rank_one_gap(state: &TwoParticleState) -> f64 {
    let sv = state.coefficients().singular_values();
    sv[1] / sv[0]
}
