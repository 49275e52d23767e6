use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, swap_subsystems, Mat2, Mat4, HERMITIAN_TOL};

/// Allowed deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD_TOL: f64 = 1e-9;

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    rho: Mat4,
}

impl TwoQubitState {
    /// Validates `rho` and stores its Hermitian part.
    pub fn new(rho: Mat4) -> Result<Self> {
        if !rho.is_finite() {
            return Err(Error::InvalidState("non-finite entries".into()));
        }
        let defect = rho.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max |rho - rho^H| = {defect:e})"
            )));
        }
        let rho = rho.hermitian_part();
        let tr = rho.trace().re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min = hermitian_eigenvalues(&rho)?.min();
        if min < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite (min eigenvalue {min:e})"
            )));
        }
        Ok(Self { rho })
    }

    /// Wraps the output of a map already known to produce a density
    /// matrix, keeping only its Hermitian part.
    pub(crate) fn from_cp_output(rho: Mat4) -> Self {
        Self {
            rho: rho.hermitian_part(),
        }
    }

    pub fn product(a: &Mat2, b: &Mat2) -> Result<Self> {
        Self::new(kron(a, b))
    }

    pub fn maximally_mixed() -> Self {
        Self {
            rho: Mat4::identity().scale(0.25),
        }
    }

    pub fn rho(&self) -> &Mat4 {
        &self.rho
    }

    pub fn into_inner(self) -> Mat4 {
        self.rho
    }

    pub fn purity(&self) -> f64 {
        (self.rho * self.rho).trace().re
    }

    /// The same state with the roles of A and B exchanged.
    pub fn swap_parties(&self) -> Self {
        Self {
            rho: swap_subsystems(&self.rho),
        }
    }

    /// Conjugation by a local unitary (or any invertible operator), renormalized.
    pub fn transformed(&self, op: &Mat4) -> Self {
        let out = op.conjugate(&self.rho);
        let tr = out.trace().re;
        Self::from_cp_output(out * Complex64::new(1.0 / tr, 0.0))
    }
}

impl TryFrom<Mat4> for TwoQubitState {
    type Error = Error;

    fn try_from(rho: Mat4) -> Result<Self> {
        Self::new(rho)
    }
}
