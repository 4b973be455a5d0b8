//! Fixed-size 4x4 complex and real matrices.
//!
//! Everything in this crate lives in four dimensions, so the matrix layer is a
//! pair of small value types with exactly the operations the physics needs:
//! products, transposes, conjugates, traces, norms, a pivoted inverse and
//! determinant, and singular values via one-sided Jacobi rotations. The Jacobi
//! route is deliberate: it computes small singular values to high *relative*
//! accuracy, so an exactly rank-one matrix reports a second singular value at
//! the machine-epsilon level rather than at sqrt(eps).

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Default absolute tolerance for approximate matrix comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;

/// 4x4 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4c {
    m: [[Complex64; 4]; 4],
}

impl Mat4c {
    pub const fn zero() -> Self {
        Mat4c {
            m: [[C_ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut out = Mat4c::zero();
        for k in 0..4 {
            out.m[k][k] = C_ONE;
        }
        out
    }

    pub const fn from_rows(rows: [[Complex64; 4]; 4]) -> Self {
        Mat4c { m: rows }
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut out = Mat4c::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = Complex64::new(rows[r][c], 0.0);
            }
        }
        out
    }

    pub fn diag(d: [Complex64; 4]) -> Self {
        let mut out = Mat4c::zero();
        for k in 0..4 {
            out.m[k][k] = d[k];
        }
        out
    }

    pub fn rows(&self) -> &[[Complex64; 4]; 4] {
        &self.m
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat4c::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = self.m[c][r];
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = out.m[r][c].conj();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    /// tr(self * other) without forming the product.
    pub fn trace_of_product(&self, other: &Mat4c) -> Complex64 {
        let mut acc = C_ZERO;
        for r in 0..4 {
            for c in 0..4 {
                acc += self.m[r][c] * other.m[c][r];
            }
        }
        acc
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] *= s;
            }
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                best = best.max(self.m[r][c].norm());
            }
        }
        best
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                acc += self.m[r][c].norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_diff(&self, other: &Mat4c) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn approx_eq(&self, other: &Mat4c, tol: f64) -> bool {
        self.max_diff(other) <= tol
    }

    pub fn mul_vec(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [C_ZERO; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r] += self.m[r][c] * v[c];
            }
        }
        out
    }

    /// Determinant by partially pivoted LU elimination.
    pub fn determinant(&self) -> Complex64 {
        let mut a = self.m;
        let mut det = C_ONE;
        for k in 0..4 {
            let mut piv = k;
            for r in k + 1..4 {
                if a[r][k].norm() > a[piv][k].norm() {
                    piv = r;
                }
            }
            if a[piv][k].norm() == 0.0 {
                return C_ZERO;
            }
            if piv != k {
                a.swap(piv, k);
                det = -det;
            }
            det *= a[k][k];
            for r in k + 1..4 {
                let f = a[r][k] / a[k][k];
                for c in k..4 {
                    a[r][c] -= f * a[k][c];
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    /// Returns None when a pivot vanishes (singular matrix).
    pub fn inverse(&self) -> Option<Mat4c> {
        let mut a = self.m;
        let mut b = Mat4c::identity().m;
        for k in 0..4 {
            let mut piv = k;
            for r in k + 1..4 {
                if a[r][k].norm() > a[piv][k].norm() {
                    piv = r;
                }
            }
            if a[piv][k].norm() < 1e-300 {
                return None;
            }
            a.swap(piv, k);
            b.swap(piv, k);
            let inv_piv = C_ONE / a[k][k];
            for c in 0..4 {
                a[k][c] *= inv_piv;
                b[k][c] *= inv_piv;
            }
            for r in 0..4 {
                if r == k {
                    continue;
                }
                let f = a[r][k];
                if f.norm() == 0.0 {
                    continue;
                }
                for c in 0..4 {
                    a[r][c] -= f * a[k][c];
                    b[r][c] -= f * b[k][c];
                }
            }
        }
        Some(Mat4c { m: b })
    }

    /// Singular values in descending order, by one-sided Jacobi rotations.
    ///
    /// Columns are rotated pairwise until mutually orthogonal; the singular
    /// values are the final column norms. Small singular values keep high
    /// relative accuracy, which the rank diagnostics depend on.
    pub fn singular_values(&self) -> [f64; 4] {
        let mut a = self.m;
        for _sweep in 0..40 {
            let mut rotated = false;
            for p in 0..4 {
                for q in p + 1..4 {
                    let mut alpha = 0.0f64;
                    let mut beta = 0.0f64;
                    let mut gamma = C_ZERO;
                    for k in 0..4 {
                        alpha += a[k][p].norm_sqr();
                        beta += a[k][q].norm_sqr();
                        gamma += a[k][p].conj() * a[k][q];
                    }
                    let g = gamma.norm();
                    if g == 0.0 || g <= 1e-15 * (alpha * beta).sqrt() {
                        continue;
                    }
                    rotated = true;
                    // Orthogonalize columns p and q with the unitary
                    // [[c, s], [-conj(s), c]], c real. Writing s = t*c*e^{-i phi}
                    // with phi = arg(gamma) reduces the orthogonality condition
                    // to t^2 - 2*tau*t - 1 = 0, tau = (beta - alpha)/(2|gamma|);
                    // take the root of smaller magnitude for stability.
                    let phase = gamma / g;
                    let tau = (beta - alpha) / (2.0 * g);
                    let t = -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = phase.conj() * (c * t);
                    for k in 0..4 {
                        let ap = a[k][p];
                        let aq = a[k][q];
                        a[k][p] = ap * c + aq * s;
                        a[k][q] = aq * c - ap * s.conj();
                    }
                }
            }
            if !rotated {
                break;
            }
        }
        let mut sv = [0.0f64; 4];
        for (j, out) in sv.iter_mut().enumerate() {
            *out = (0..4).map(|k| a[k][j].norm_sqr()).sum::<f64>().sqrt();
        }
        sv.sort_by(|x, y| y.partial_cmp(x).expect("singular values are finite"));
        sv
    }
}

impl Index<(usize, usize)> for Mat4c {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.m[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat4c {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.m[r][c]
    }
}

impl Add for Mat4c {
    type Output = Mat4c;
    fn add(self, rhs: Mat4c) -> Mat4c {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] += rhs.m[r][c];
            }
        }
        out
    }
}

impl Sub for Mat4c {
    type Output = Mat4c;
    fn sub(self, rhs: Mat4c) -> Mat4c {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] -= rhs.m[r][c];
            }
        }
        out
    }
}

impl Neg for Mat4c {
    type Output = Mat4c;
    fn neg(self) -> Mat4c {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = -out.m[r][c];
            }
        }
        out
    }
}

impl Mul for Mat4c {
    type Output = Mat4c;
    fn mul(self, rhs: Mat4c) -> Mat4c {
        let mut out = Mat4c::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.m[r][k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for c in 0..4 {
                    out.m[r][c] += a * rhs.m[k][c];
                }
            }
        }
        out
    }
}

impl Mul<Complex64> for Mat4c {
    type Output = Mat4c;
    fn mul(self, rhs: Complex64) -> Mat4c {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] *= rhs;
            }
        }
        out
    }
}

fn fmt_entry(z: Complex64) -> String {
    let near_int = |x: f64| (x - x.round()).abs() < 1e-12 && x.abs() < 1e6;
    if z.norm() == 0.0 {
        return "0".into();
    }
    if near_int(z.re) && near_int(z.im) {
        let (re, im) = (z.re.round() as i64, z.im.round() as i64);
        let im_part = match im {
            0 => String::new(),
            1 => "i".into(),
            -1 => "-i".into(),
            _ => format!("{im}i"),
        };
        return match (re, im) {
            (0, _) => im_part,
            (_, 0) => format!("{re}"),
            (_, im) if im > 0 => format!("{re}+{im_part}"),
            _ => format!("{re}{im_part}"),
        };
    }
    format!("{:.4}{:+.4}i", z.re, z.im)
}

impl fmt::Display for Mat4c {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .m
            .iter()
            .map(|row| row.iter().map(|&z| fmt_entry(z)).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                let sep = if j == 3 { "" } else { "  " };
                write!(f, "{cell:>width$}{sep}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// 4x4 real matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4r {
    m: [[f64; 4]; 4],
}

impl Mat4r {
    pub const fn zero() -> Self {
        Mat4r { m: [[0.0; 4]; 4] }
    }

    pub fn identity() -> Self {
        let mut out = Mat4r::zero();
        for k in 0..4 {
            out.m[k][k] = 1.0;
        }
        out
    }

    pub const fn from_rows(rows: [[f64; 4]; 4]) -> Self {
        Mat4r { m: rows }
    }

    pub fn diag(d: [f64; 4]) -> Self {
        let mut out = Mat4r::zero();
        for k in 0..4 {
            out.m[k][k] = d[k];
        }
        out
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat4r::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = self.m[c][r];
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                best = best.max(self.m[r][c].abs());
            }
        }
        best
    }

    pub fn max_diff(&self, other: &Mat4r) -> f64 {
        let mut best = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                best = best.max((self.m[r][c] - other.m[r][c]).abs());
            }
        }
        best
    }

    pub fn approx_eq(&self, other: &Mat4r, tol: f64) -> bool {
        self.max_diff(other) <= tol
    }

    pub fn determinant(&self) -> f64 {
        let mut a = self.m;
        let mut det = 1.0f64;
        for k in 0..4 {
            let mut piv = k;
            for r in k + 1..4 {
                if a[r][k].abs() > a[piv][k].abs() {
                    piv = r;
                }
            }
            if a[piv][k] == 0.0 {
                return 0.0;
            }
            if piv != k {
                a.swap(piv, k);
                det = -det;
            }
            det *= a[k][k];
            for r in k + 1..4 {
                let f = a[r][k] / a[k][k];
                for c in k..4 {
                    a[r][c] -= f * a[k][c];
                }
            }
        }
        det
    }

    pub fn mul_vec(&self, v: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r] += self.m[r][c] * v[c];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Mat4r {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.m[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat4r {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.m[r][c]
    }
}

impl Mul for Mat4r {
    type Output = Mat4r;
    fn mul(self, rhs: Mat4r) -> Mat4r {
        let mut out = Mat4r::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.m[r][k];
                if a == 0.0 {
                    continue;
                }
                for c in 0..4 {
                    out.m[r][c] += a * rhs.m[k][c];
                }
            }
        }
        out
    }
}

impl fmt::Display for Mat4r {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            writeln!(
                f,
                "[{:>10.6}  {:>10.6}  {:>10.6}  {:>10.6}]",
                row[0], row[1], row[2], row[3]
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn random_mat(rng: &mut ChaCha12Rng) -> Mat4c {
        let mut m = Mat4c::zero();
        for r in 0..4 {
            for c in 0..4 {
                m[(r, c)] = Complex64::new(
                    rng.random::<f64>() * 2.0 - 1.0,
                    rng.random::<f64>() * 2.0 - 1.0,
                );
            }
        }
        m
    }

    /// Independent route to the two largest singular values: power iteration
    /// with deflation on the normal matrix A^H A.
    fn top_two_singular_values_power(a: &Mat4c) -> (f64, f64) {
        let h = a.adjoint() * *a;
        let dominant = |m: &Mat4c| -> (f64, [Complex64; 4]) {
            let mut v = [
                Complex64::new(1.0, 0.3),
                Complex64::new(-0.4, 0.9),
                Complex64::new(0.7, -0.2),
                Complex64::new(0.1, 0.5),
            ];
            let mut lam = 0.0;
            for _ in 0..500 {
                let w = m.mul_vec(&v);
                let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return (0.0, v);
                }
                for k in 0..4 {
                    v[k] = w[k] / norm;
                }
                lam = norm;
            }
            (lam, v)
        };
        let (l1, v1) = dominant(&h);
        let mut deflated = h;
        for r in 0..4 {
            for c in 0..4 {
                deflated[(r, c)] -= Complex64::new(l1, 0.0) * v1[r] * v1[c].conj();
            }
        }
        let (l2, _) = dominant(&deflated);
        (l1.max(0.0).sqrt(), l2.max(0.0).sqrt())
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let a = random_mat(&mut rng);
        assert_eq!(a * Mat4c::identity(), Mat4c::identity() * a);
        assert!((a * Mat4c::identity()).approx_eq(&a, 0.0));
    }

    #[test]
    fn transpose_of_product_reverses_factors() {
        let mut rng = ChaCha12Rng::seed_from_u64(12);
        let a = random_mat(&mut rng);
        let b = random_mat(&mut rng);
        let lhs = (a * b).transpose();
        let rhs = b.transpose() * a.transpose();
        assert!(lhs.approx_eq(&rhs, 1e-14));
    }

    #[test]
    fn trace_of_product_matches_explicit_product() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        let a = random_mat(&mut rng);
        let b = random_mat(&mut rng);
        let direct = a.trace_of_product(&b);
        let formed = (a * b).trace();
        assert!((direct - formed).norm() < 1e-13);
    }

    #[test]
    fn inverse_times_self_is_identity() {
        let mut rng = ChaCha12Rng::seed_from_u64(14);
        for _ in 0..20 {
            let a = random_mat(&mut rng) + Mat4c::identity().scale(2.0);
            let inv = a.inverse().expect("shifted random matrix is invertible");
            assert!((a * inv).approx_eq(&Mat4c::identity(), 1e-12));
            assert!((inv * a).approx_eq(&Mat4c::identity(), 1e-12));
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse_and_zero_determinant() {
        let mut a = Mat4c::zero();
        a[(0, 0)] = C_ONE;
        a[(1, 1)] = C_ONE;
        assert!(a.inverse().is_none());
        assert_eq!(a.determinant(), C_ZERO);
    }

    #[test]
    fn determinant_of_diagonal_is_entry_product() {
        let d = Mat4c::diag([
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 3.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.5, 0.5),
        ]);
        let expect = Complex64::new(2.0, 0.0)
            * Complex64::new(0.0, 3.0)
            * Complex64::new(-1.0, 0.0)
            * Complex64::new(0.5, 0.5);
        assert!((d.determinant() - expect).norm() < 1e-14);
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha12Rng::seed_from_u64(15);
        let a = random_mat(&mut rng);
        let b = random_mat(&mut rng);
        let lhs = (a * b).determinant();
        let rhs = a.determinant() * b.determinant();
        assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn singular_values_of_real_diagonal() {
        let d = Mat4c::diag([
            Complex64::new(3.0, 0.0),
            Complex64::new(0.0, -2.0),
            Complex64::new(1.0, 0.0),
            C_ZERO,
        ]);
        let sv = d.singular_values();
        assert!((sv[0] - 3.0).abs() < 1e-14);
        assert!((sv[1] - 2.0).abs() < 1e-14);
        assert!((sv[2] - 1.0).abs() < 1e-14);
        assert!(sv[3].abs() < 1e-14);
    }

    #[test]
    fn singular_values_agree_with_power_iteration() {
        let mut rng = ChaCha12Rng::seed_from_u64(16);
        for _ in 0..25 {
            let a = random_mat(&mut rng);
            let sv = a.singular_values();
            let (s1, s2) = top_two_singular_values_power(&a);
            assert!(
                (sv[0] - s1).abs() < 1e-8 * s1.max(1.0),
                "sv[0]={} power={}",
                sv[0],
                s1
            );
            assert!(
                (sv[1] - s2).abs() < 1e-7 * s1.max(1.0),
                "sv[1]={} power={}",
                sv[1],
                s2
            );
        }
    }

    #[test]
    fn rank_one_outer_product_keeps_tiny_second_singular_value() {
        // High relative accuracy of the one-sided Jacobi sweep: the trailing
        // singular values of an exact outer product sit at machine level.
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for _ in 0..20 {
            let mut a = Mat4c::zero();
            let u: Vec<Complex64> = (0..4)
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect();
            let v: Vec<Complex64> = (0..4)
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect();
            for r in 0..4 {
                for c in 0..4 {
                    a[(r, c)] = u[r] * v[c];
                }
            }
            let sv = a.singular_values();
            assert!(sv[0] > 0.0);
            assert!(
                sv[1] / sv[0] < 1e-13,
                "ratio {} not at machine level",
                sv[1] / sv[0]
            );
        }
    }

    #[test]
    fn frobenius_norm_matches_singular_value_sum_of_squares() {
        let mut rng = ChaCha12Rng::seed_from_u64(18);
        let a = random_mat(&mut rng);
        let sv = a.singular_values();
        let fro = a.frobenius_norm();
        let from_sv = sv.iter().map(|s| s * s).sum::<f64>().sqrt();
        assert!((fro - from_sv).abs() < 1e-12 * fro);
    }

    #[test]
    fn real_matrix_product_and_determinant() {
        let g = Mat4r::diag([1.0, -1.0, -1.0, -1.0]);
        assert_eq!(g * g, Mat4r::identity());
        assert_eq!(g.determinant(), -1.0);
        assert_eq!(Mat4r::identity().determinant(), 1.0);
    }

    #[test]
    fn display_prints_gaussian_integers_compactly() {
        let mut m = Mat4c::zero();
        m[(0, 1)] = C_I;
        m[(1, 0)] = -C_I;
        m[(2, 2)] = Complex64::new(1.0, 1.0);
        let shown = format!("{m}");
        assert!(shown.contains('i'));
        assert!(shown.contains("1+i"));
    }
}
