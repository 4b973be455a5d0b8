//! The nine covariant bilinear quantities of a two-particle state.
//!
//! Every quantity is a trace form (1/2) tr[psi^T L psi R] where L acts on
//! observer A's index and R on observer B's, and each factor is one of the
//! six antisymmetric kernels C, C gamma^5, C gamma^mu:
//!
//! | quantity      | L           | R           | behaves as            |
//! |---------------|-------------|-------------|-----------------------|
//! | I1            | C           | C           | scalar x scalar       |
//! | I2            | C gamma^5   | C gamma^5   | pseudoscalar x pseudo |
//! | I2A           | C           | C gamma^5   | scalar x pseudo       |
//! | I2B           | C gamma^5   | C           | pseudo x scalar       |
//! | KA^mu         | C gamma^mu  | C           | vector x scalar       |
//! | KB^mu         | C           | C gamma^mu  | scalar x vector       |
//! | LA^mu         | C gamma^mu  | C gamma^5   | vector x pseudo       |
//! | LB^mu         | C gamma^5   | C gamma^mu  | pseudo x vector       |
//! | KAB^{mu nu}   | C gamma^mu  | C gamma^nu  | vector x vector       |
//!
//! Under psi -> S_A psi S_B^T the scalar slots are invariant, the vector
//! slots contract with the corresponding Lambda, and KAB contracts with both;
//! [`BitensorSet::transformed`] implements that law so it can be checked
//! against direct recomputation. Under parity in one lab each slot picks up
//! the sign of gamma^0 X gamma^0 = +/- X of its kernel on that side, which
//! [`parity_action`] derives from the kernels rather than hard-coding.
//!
//! All 36 components are bilinear in psi, so they scale as c^2 under
//! psi -> c psi, and every kernel is antisymmetric, which forces all of them
//! to zero exactly on product states.

use crate::clifford::{charge_conjugation, gamma5, gammas};
use crate::lorentz::VectorTransform;
use crate::matrix::{Mat4c, C_ZERO};
use crate::states::TwoParticleState;
use num_complex::Complex64;
use std::sync::OnceLock;

/// Which observer an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lab {
    A,
    B,
}

pub(crate) struct Kernels {
    pub c: Mat4c,
    pub cg5: Mat4c,
    pub cg: [Mat4c; 4],
}

pub(crate) fn kernels() -> &'static Kernels {
    static KERNELS: OnceLock<Kernels> = OnceLock::new();
    KERNELS.get_or_init(|| {
        let c = charge_conjugation();
        let g = gammas();
        Kernels {
            c,
            cg5: c * gamma5(),
            cg: [c * g[0], c * g[1], c * g[2], c * g[3]],
        }
    })
}

/// (1/2) tr[psi^T L psi R].
pub fn trace_form(state: &TwoParticleState, left: &Mat4c, right: &Mat4c) -> Complex64 {
    let psi = state.coefficients();
    let m = (psi.transpose() * *left) * *psi;
    m.trace_of_product(right) * Complex64::new(0.5, 0.0)
}

/// All 36 components of the nine quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BitensorSet {
    pub i1: Complex64,
    pub i2: Complex64,
    pub i2a: Complex64,
    pub i2b: Complex64,
    pub ka: [Complex64; 4],
    pub kb: [Complex64; 4],
    pub la: [Complex64; 4],
    pub lb: [Complex64; 4],
    pub kab: [[Complex64; 4]; 4],
}

/// Evaluates all nine quantities of a state.
pub fn compute_all(state: &TwoParticleState) -> BitensorSet {
    let k = kernels();
    let psi = state.coefficients();
    let t = psi.transpose();
    // One middle product psi^T L psi per left kernel; traces against the
    // right kernels are cheap.
    let m_c = (t * k.c) * *psi;
    let m_5 = (t * k.cg5) * *psi;
    let m_g: [Mat4c; 4] = std::array::from_fn(|mu| (t * k.cg[mu]) * *psi);

    let half = Complex64::new(0.5, 0.0);
    let mut set = BitensorSet {
        i1: m_c.trace_of_product(&k.c) * half,
        i2: m_5.trace_of_product(&k.cg5) * half,
        i2a: m_c.trace_of_product(&k.cg5) * half,
        i2b: m_5.trace_of_product(&k.c) * half,
        ka: [C_ZERO; 4],
        kb: [C_ZERO; 4],
        la: [C_ZERO; 4],
        lb: [C_ZERO; 4],
        kab: [[C_ZERO; 4]; 4],
    };
    for mu in 0..4 {
        set.ka[mu] = m_g[mu].trace_of_product(&k.c) * half;
        set.kb[mu] = m_c.trace_of_product(&k.cg[mu]) * half;
        set.la[mu] = m_g[mu].trace_of_product(&k.cg5) * half;
        set.lb[mu] = m_5.trace_of_product(&k.cg[mu]) * half;
        for nu in 0..4 {
            set.kab[mu][nu] = m_g[mu].trace_of_product(&k.cg[nu]) * half;
        }
    }
    set
}

impl BitensorSet {
    /// All 36 components with readable labels, scalars first.
    pub fn components(&self) -> Vec<(String, Complex64)> {
        let mut out = Vec::with_capacity(36);
        out.push(("I1".to_string(), self.i1));
        out.push(("I2".to_string(), self.i2));
        out.push(("I2A".to_string(), self.i2a));
        out.push(("I2B".to_string(), self.i2b));
        for mu in 0..4 {
            out.push((format!("KA[{mu}]"), self.ka[mu]));
        }
        for mu in 0..4 {
            out.push((format!("KB[{mu}]"), self.kb[mu]));
        }
        for mu in 0..4 {
            out.push((format!("LA[{mu}]"), self.la[mu]));
        }
        for mu in 0..4 {
            out.push((format!("LB[{mu}]"), self.lb[mu]));
        }
        for mu in 0..4 {
            for nu in 0..4 {
                out.push((format!("KAB[{mu}][{nu}]"), self.kab[mu][nu]));
            }
        }
        out
    }

    fn values(&self) -> [Complex64; 36] {
        let mut out = [C_ZERO; 36];
        let mut k = 0;
        let mut push = |z: Complex64| {
            out[k] = z;
            k += 1;
        };
        push(self.i1);
        push(self.i2);
        push(self.i2a);
        push(self.i2b);
        for v in [&self.ka, &self.kb, &self.la, &self.lb] {
            for &z in v {
                push(z);
            }
        }
        for row in &self.kab {
            for &z in row {
                push(z);
            }
        }
        out
    }

    /// Largest component magnitude; the entanglement indicator.
    pub fn max_abs(&self) -> f64 {
        self.values()
            .iter()
            .fold(0.0f64, |acc, z| acc.max(z.norm()))
    }

    /// Largest componentwise difference against another set.
    pub fn max_diff(&self, other: &BitensorSet) -> f64 {
        let a = self.values();
        let b = other.values();
        a.iter()
            .zip(b.iter())
            .fold(0.0f64, |acc, (x, y)| acc.max((x - y).norm()))
    }

    /// The transformation law under psi -> S_A psi S_B^T: scalars are
    /// invariant, KA/LA contract with Lambda_A, KB/LB with Lambda_B, and KAB
    /// with both.
    pub fn transformed(&self, lam_a: &VectorTransform, lam_b: &VectorTransform) -> BitensorSet {
        let a = lam_a.matrix();
        let b = lam_b.matrix();
        let mix = |lam: &crate::matrix::Mat4r, v: &[Complex64; 4]| -> [Complex64; 4] {
            let mut out = [C_ZERO; 4];
            for mu in 0..4 {
                for nu in 0..4 {
                    out[mu] += v[nu] * lam[(mu, nu)];
                }
            }
            out
        };
        let mut kab = [[C_ZERO; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                let mut acc = C_ZERO;
                for r in 0..4 {
                    for s in 0..4 {
                        acc += self.kab[r][s] * (a[(mu, r)] * b[(nu, s)]);
                    }
                }
                kab[mu][nu] = acc;
            }
        }
        BitensorSet {
            i1: self.i1,
            i2: self.i2,
            i2a: self.i2a,
            i2b: self.i2b,
            ka: mix(a, &self.ka),
            kb: mix(b, &self.kb),
            la: mix(a, &self.la),
            lb: mix(b, &self.lb),
            kab,
        }
    }
}

/// Sign of gamma^0 X gamma^0 relative to X; every kernel is an eigenmatrix
/// of this conjugation, and the products are exact in f64.
fn parity_conjugation_sign(kernel: &Mat4c) -> f64 {
    let g0 = gammas()[0];
    let conjugated = g0 * *kernel * g0;
    if conjugated == *kernel {
        1.0
    } else if conjugated == -*kernel {
        -1.0
    } else {
        unreachable!("kernels are parity eigenmatrices")
    }
}

/// The action of parity in one lab on the full set. Under parity at A the
/// state maps to gamma^0 psi, so each slot picks up the sign of gamma^0 L
/// gamma^0 for its left kernel; at B (psi -> psi gamma^0, gamma^0 symmetric)
/// the sign comes from the right kernel by trace cyclicity. The signs are
/// derived from the kernels here, not written out by hand.
pub fn parity_action(set: &BitensorSet, lab: Lab) -> BitensorSet {
    let k = kernels();
    let sign_c = parity_conjugation_sign(&k.c);
    let sign_5 = parity_conjugation_sign(&k.cg5);
    let sign_g: [f64; 4] = std::array::from_fn(|mu| parity_conjugation_sign(&k.cg[mu]));

    let scale = |z: Complex64, s: f64| z * s;
    let scale_vec =
        |v: &[Complex64; 4], s: f64| -> [Complex64; 4] { std::array::from_fn(|mu| v[mu] * s) };
    let scale_vec_by =
        |v: &[Complex64; 4]| -> [Complex64; 4] { std::array::from_fn(|mu| v[mu] * sign_g[mu]) };

    match lab {
        // Left kernels: I1, I2A, KB use C; I2, I2B, LB use C gamma^5;
        // KA, LA, KAB[mu][.] use C gamma^mu.
        Lab::A => BitensorSet {
            i1: scale(set.i1, sign_c),
            i2: scale(set.i2, sign_5),
            i2a: scale(set.i2a, sign_c),
            i2b: scale(set.i2b, sign_5),
            ka: scale_vec_by(&set.ka),
            kb: scale_vec(&set.kb, sign_c),
            la: scale_vec_by(&set.la),
            lb: scale_vec(&set.lb, sign_5),
            kab: std::array::from_fn(|mu| scale_vec(&set.kab[mu], sign_g[mu])),
        },
        // Right kernels: I1, I2B, KA use C; I2, I2A, LA use C gamma^5;
        // KB, LB, KAB[.][nu] use C gamma^nu.
        Lab::B => BitensorSet {
            i1: scale(set.i1, sign_c),
            i2: scale(set.i2, sign_5),
            i2a: scale(set.i2a, sign_5),
            i2b: scale(set.i2b, sign_c),
            ka: scale_vec(&set.ka, sign_c),
            kb: scale_vec_by(&set.kb),
            la: scale_vec(&set.la, sign_5),
            lb: scale_vec_by(&set.lb),
            kab: std::array::from_fn(|mu| scale_vec_by(&set.kab[mu])),
        },
    }
}
