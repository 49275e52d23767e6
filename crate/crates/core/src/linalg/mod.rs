//! Dense complex matrices of dimension 2 and 4.
//!
//! Two-qubit operators use the basis order |00>, |01>, |10>, |11> with
//! subsystem A as the left tensor factor, so `kron(a, b)[2i+k][2j+l] = a[i][j] * b[k][l]`.

mod jacobi;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use jacobi::{hermitian_eigenvalues, Spectrum, MAX_SWEEPS};

/// Elementwise tolerance below which a matrix counts as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix with compile-time dimension, stored row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Mat<const N: usize> {
    data: [[Complex64; N]; N],
}

pub type Mat2 = Mat<2>;
pub type Mat4 = Mat<4>;

/// One of the two qubits of a bipartite state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

impl<const N: usize> Mat<N> {
    pub const fn from_rows(data: [[Complex64; N]; N]) -> Self {
        Self { data }
    }

    /// Builds a matrix from runtime rows, checking the shape.
    pub fn try_from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.len() != N || rows.iter().any(|row| row.len() != N) {
            return Err(Error::Dimension {
                expected: N,
                rows: rows.len(),
                cols,
            });
        }
        let mut m = Self::zeros();
        for (i, row) in rows.iter().enumerate() {
            m.data[i].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn from_real(data: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| Complex64::new(data[i][j], 0.0))
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = [[ZERO; N]; N];
        for (i, row) in data.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = f(i, j);
            }
        }
        Self { data }
    }

    pub const fn zeros() -> Self {
        Self { data: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { ONE } else { ZERO })
    }

    pub fn diag(values: [f64; N]) -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    pub const fn dim(&self) -> usize {
        N
    }

    pub fn rows(&self) -> &[[Complex64; N]; N] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self::from_fn(|i, j| f(self.data[i][j]))
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|z| z * k)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(|i, j| self.data[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.data[j][i])
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.data[i][i]).sum()
    }

    /// `self * other * self^H`.
    pub fn conjugate(&self, other: &Self) -> Self {
        *self * *other * self.dagger()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .flatten()
            .zip(other.data.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest elementwise modulus of `self - self^H`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// `(A + A^H) / 2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.dagger()).scale(0.5)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64; N]) -> [Complex64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.data[i][k] * v[k]).sum();
        }
        out
    }
}

/// Matrix product with a runtime shape check, for callers holding
/// dynamically shaped data. Statically typed code uses `*`.
pub fn mat_mul<const N: usize, const M: usize>(a: &Mat<N>, b: &Mat<M>) -> Result<Mat<N>> {
    if N != M {
        return Err(Error::Dimension {
            expected: N,
            rows: M,
            cols: M,
        });
    }
    Ok(Mat::from_fn(|i, j| {
        (0..N).map(|k| a.data[i][k] * b.data[k][j]).sum()
    }))
}

/// Kronecker product with A as the major index.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|row, col| {
        let (i, k) = (row / 2, row % 2);
        let (j, l) = (col / 2, col % 2);
        a.data[i][j] * b.data[k][l]
    })
}

/// Reduced 2x2 operator on `keep`, tracing out the other qubit.
pub fn partial_trace(rho: &Mat4, keep: Subsystem) -> Mat2 {
    Mat2::from_fn(|x, y| match keep {
        Subsystem::A => (0..2).map(|k| rho.data[2 * x + k][2 * y + k]).sum(),
        Subsystem::B => (0..2).map(|i| rho.data[2 * i + x][2 * i + y]).sum(),
    })
}

/// Transposes the indices of one qubit only.
pub fn partial_transpose(rho: &Mat4, on: Subsystem) -> Mat4 {
    Mat4::from_fn(|row, col| {
        let (i, k) = (row / 2, row % 2);
        let (j, l) = (col / 2, col % 2);
        match on {
            Subsystem::A => rho.data[2 * j + k][2 * i + l],
            Subsystem::B => rho.data[2 * i + l][2 * j + k],
        }
    })
}

/// Exchanges the two tensor factors: `swap(kron(a, b)) == kron(b, a)`.
pub fn swap_subsystems(rho: &Mat4) -> Mat4 {
    let perm = [0, 2, 1, 3];
    Mat4::from_fn(|i, j| rho.data[perm[i]][perm[j]])
}

/// Pauli matrices and other fixed single-qubit operators.
pub mod pauli {
    use super::{Mat2, I, ONE, ZERO};

    pub const X: Mat2 = Mat2::from_rows([[ZERO, ONE], [ONE, ZERO]]);
    pub const Y: Mat2 = Mat2::from_rows([[ZERO, super::Complex64::new(0.0, -1.0)], [I, ZERO]]);
    pub const Z: Mat2 = Mat2::from_rows([[ONE, ZERO], [ZERO, super::Complex64::new(-1.0, 0.0)]]);
    pub const ID: Mat2 = Mat2::from_rows([[ONE, ZERO], [ZERO, ONE]]);
}

impl<const N: usize> Index<(usize, usize)> for Mat<N> {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Mat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i][j]
    }
}

impl<const N: usize> Mul for Mat<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.data[i][k] * rhs.data[k][j]).sum())
    }
}

impl<const N: usize> Mul<Complex64> for Mat<N> {
    type Output = Self;

    fn mul(self, k: Complex64) -> Self {
        self.map(|z| z * k)
    }
}

impl<const N: usize> Add for Mat<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.data[i][j] + rhs.data[i][j])
    }
}

impl<const N: usize> Sub for Mat<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.data[i][j] - rhs.data[i][j])
    }
}

impl<const N: usize> Neg for Mat<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<const N: usize> Default for Mat<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> fmt::Debug for Mat<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat{N}[")?;
        for row in &self.data {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
