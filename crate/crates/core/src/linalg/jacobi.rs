//! Cyclic complex Jacobi eigenvalue solver for small Hermitian matrices.

use num_complex::Complex64;

use super::{Mat, HERMITIAN_TOL};
use crate::error::{Error, Result};

/// Hard cap on full cyclic sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Stop once the off-diagonal Frobenius norm falls below this, relative to
/// `max(1, ||A||_F)`.
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Real eigenvalues of a Hermitian matrix, ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum<const N: usize> {
    pub eigenvalues: [f64; N],
}

impl<const N: usize> Spectrum<N> {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[N - 1]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

fn off_diagonal_norm<const N: usize>(m: &[[Complex64; N]; N]) -> f64 {
    let mut acc = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                acc += z.norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Eigenvalues of a Hermitian matrix.
///
/// Inputs within `HERMITIAN_TOL` of Hermitian are replaced by their Hermitian
/// part before the sweeps start. Each rotation first removes the phase of the
/// pivot `a_pq`, then applies the real Jacobi rotation that zeroes it.
pub fn hermitian_eigenvalues<const N: usize>(a: &Mat<N>) -> Result<Spectrum<N>> {
    if !a.is_finite() {
        return Err(Error::InvalidState("matrix has non-finite entries".into()));
    }
    let deviation = a.hermiticity_defect();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let mut m = a.hermitian_part().data;
    let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) < threshold {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut m, p, q);
            }
        }
    }
    let off_norm = off_diagonal_norm(&m);
    if !converged && off_norm >= threshold {
        return Err(Error::Convergence {
            sweeps: MAX_SWEEPS,
            off_norm,
        });
    }

    let mut eigenvalues = [0.0; N];
    for (i, e) in eigenvalues.iter_mut().enumerate() {
        *e = m[i][i].re;
    }
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues })
}

fn rotate<const N: usize>(m: &mut [[Complex64; N]; N], p: usize, q: usize) {
    let apq = m[p][q];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = (apq / b).conj();

    let theta = (m[q][q].re - m[p][p].re) / (2.0 * b);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = phase * (-s);
    let g_qq = phase * c;

    // A <- A G
    for row in m.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = kp * g_pp + kq * g_qp;
        row[q] = kp * g_pq + kq * g_qq;
    }
    // A <- G^H A
    #[allow(clippy::needless_range_loop)] // rows p and q are both written
    for k in 0..N {
        let (pk, qk) = (m[p][k], m[q][k]);
        m[p][k] = g_pp.conj() * pk + g_qp.conj() * qk;
        m[q][k] = g_pq.conj() * pk + g_qq.conj() * qk;
    }

    m[p][q] = Complex64::new(0.0, 0.0);
    m[q][p] = Complex64::new(0.0, 0.0);
    m[p][p].im = 0.0;
    m[q][q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{partial_transpose, Mat4, Subsystem};

    #[test]
    fn diagonal_input() {
        let s = hermitian_eigenvalues(&Mat4::diag([3.0, 1.0, 4.0, 2.0])).unwrap();
        assert_eq!(s.eigenvalues, [1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn bell_partial_transpose() {
        let bell = Mat4::from_real([
            [0.5, 0.0, 0.0, 0.5],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.5, 0.0, 0.0, 0.5],
        ]);
        let s = hermitian_eigenvalues(&partial_transpose(&bell, Subsystem::B)).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (got, want) in s.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{:?}", s.eigenvalues);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = Mat4::identity();
        m[(0, 1)] = Complex64::new(1e-6, 0.0);
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn accepts_drift_inside_tolerance() {
        let mut m = Mat4::diag([1.0, 2.0, 3.0, 4.0]);
        m[(0, 1)] = Complex64::new(1e-12, 0.0);
        m[(2, 2)].im = 5e-11;
        let s = hermitian_eigenvalues(&m).unwrap();
        assert!((s.eigenvalues[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_nan() {
        let mut m = Mat4::identity();
        m[(1, 1)] = Complex64::new(f64::NAN, 0.0);
        assert!(hermitian_eigenvalues(&m).is_err());
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = Mat::<2>::from_rows([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            [Complex64::new(0.0, -1.0), Complex64::new(1.0, 0.0)],
        ]);
        let s = hermitian_eigenvalues(&m).unwrap();
        assert!(s.eigenvalues[0].abs() < 1e-14);
        assert!((s.eigenvalues[1] - 2.0).abs() < 1e-14);
    }
}
