//! Entanglement and the non-local advantage of quantum coherence for a Bell
//! pair whose qubits undergo Unruh acceleration, and their recovery under
//! local PT-symmetric (non-Hermitian) operations.
//!
//! The pipeline for one data point is
//! [`bell_phi_plus`] → [`accelerate`] → optionally [`evolve`] → [`negativity`] / [`naqc`].
//! [`sweep`] runs that pipeline over grids and writes CSV; [`verify`] compares
//! the direct algebra against the published element-by-element closed forms.

// `!(x <= tol)` is used on purpose so that NaN fails range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod ptsym;
pub mod state;
pub mod sweep;
pub mod unruh;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{
    hermitian_eigenvalues, kron, partial_trace, partial_transpose, Mat2, Mat4, Spectrum, Subsystem,
};
pub use measures::{
    l1_coherence, measure_on_a, naqc, naqc_sum, negativity, MeasurementOutcome, NaqcConstants, PauliAxis,
};
pub use ptsym::{evolve, h_pt, u_pt, PTParams, PTTarget};
pub use state::TwoQubitState;
pub use sweep::{emit_csv, figure_preset, run_sweep, FigurePreset, MeasureRecord, SweepSpec, SweepVariable};
pub use unruh::{
    accelerate, apply_channel, bell_phi_plus, unruh_kraus, AccelerationSpec, KrausPair, Scenario,
};
pub use verify::{verify_closed_forms, VerificationReport};

pub use num_complex::Complex64;
