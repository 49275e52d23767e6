//! Negativity, l1-norm coherence and the non-local advantage of quantum coherence.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{hermitian_eigenvalues, kron, partial_trace, partial_transpose, pauli};
use crate::linalg::{Mat2, Subsystem, ONE, ZERO};
use crate::state::TwoQubitState;

/// Outcomes with probability below this leave the conditioned state undefined.
pub const OUTCOME_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn matrix(self) -> Mat2 {
        match self {
            PauliAxis::X => pauli::X,
            PauliAxis::Y => pauli::Y,
            PauliAxis::Z => pauli::Z,
        }
    }

    /// Unitary whose columns are the +1 and -1 eigenvectors.
    pub fn eigenbasis(self) -> Mat2 {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        match self {
            PauliAxis::X => Mat2::from_rows([[h, h], [h, -h]]),
            PauliAxis::Y => Mat2::from_rows([[h, h], [h * Complex64::i(), -h * Complex64::i()]]),
            PauliAxis::Z => Mat2::from_rows([[ONE, ZERO], [ZERO, ONE]]),
        }
    }

    /// Projector `(I + (-1)^bit sigma) / 2`.
    pub fn projector(self, outcome_bit: u8) -> Mat2 {
        let sign = if outcome_bit == 0 { 1.0 } else { -1.0 };
        (pauli::ID + self.matrix().scale(sign)).scale(0.5)
    }
}

/// Critical value of the averaged coherence and its two-qubit maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaqcConstants {
    pub c_m: f64,
    pub c_max: f64,
}

impl NaqcConstants {
    pub fn l1() -> Self {
        Self {
            c_m: 6f64.sqrt(),
            c_max: 3.0,
        }
    }
}

impl Default for NaqcConstants {
    fn default() -> Self {
        Self::l1()
    }
}

/// Result of a projective Pauli measurement on qubit A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    pub probability: f64,
    /// `None` when the outcome has (numerically) zero probability.
    pub conditioned_state: Option<Mat2>,
}

/// `max(0, -2 * min eigenvalue of rho^{T_B})`.
pub fn negativity(state: &TwoQubitState) -> Result<f64> {
    let spectrum = hermitian_eigenvalues(&partial_transpose(state.rho(), Subsystem::B))?;
    Ok((-2.0 * spectrum.min()).max(0.0))
}

/// Sum of the moduli of the off-diagonal elements of `rho` in the eigenbasis of `basis`.
pub fn l1_coherence(rho: &Mat2, basis: PauliAxis) -> f64 {
    let v = basis.eigenbasis();
    let m = v.dagger() * *rho * v;
    m[(0, 1)].norm() + m[(1, 0)].norm()
}

pub fn measure_on_a(state: &TwoQubitState, axis: PauliAxis, outcome_bit: u8) -> MeasurementOutcome {
    let lifted = kron(&axis.projector(outcome_bit), &pauli::ID);
    let post = lifted.conjugate(state.rho());
    let probability = post.trace().re.clamp(0.0, 1.0);
    let conditioned_state = (probability >= OUTCOME_THRESHOLD).then(|| {
        partial_trace(&post, Subsystem::B)
            .hermitian_part()
            .scale(1.0 / probability)
    });
    MeasurementOutcome {
        probability,
        conditioned_state,
    }
}

/// Probability-weighted coherence of B after Pauli measurements on A, summed
/// over measured axis i, outcome a and reference axis j != i, halved.
pub fn naqc_sum(state: &TwoQubitState) -> f64 {
    let mut total = 0.0;
    for measured in PauliAxis::ALL {
        for bit in [0u8, 1] {
            let outcome = measure_on_a(state, measured, bit);
            let Some(rho_b) = outcome.conditioned_state else {
                continue;
            };
            for reference in PauliAxis::ALL.into_iter().filter(|&j| j != measured) {
                total += outcome.probability * l1_coherence(&rho_b, reference);
            }
        }
    }
    total / 2.0
}

/// Normalized degree of the non-local coherence advantage, in [0, 1].
pub fn naqc(state: &TwoQubitState) -> f64 {
    naqc_with(state, &NaqcConstants::l1())
}

pub fn naqc_with(state: &TwoQubitState, constants: &NaqcConstants) -> f64 {
    ((naqc_sum(state) - constants.c_m) / (constants.c_max - constants.c_m)).max(0.0)
}

/// NAQC with the measurement performed on `measured` and coherence read on the other qubit.
pub fn naqc_measuring(state: &TwoQubitState, measured: Subsystem) -> f64 {
    match measured {
        Subsystem::A => naqc(state),
        Subsystem::B => naqc(&state.swap_parties()),
    }
}
