//! Bell-state preparation and the single-mode Unruh channel.
//!
//! Accelerating a qubit maps |0> to cos r |0_I 0_II> + sin r |1_I 1_II> and
//! |1> to |1_I 0_II>. Tracing out region II leaves the Kraus pair
//! `K0 = diag(cos r, 1)`, `K1 = sin r |1><0|` acting on the accelerated qubit.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, Mat2, Mat4, Subsystem};
use crate::state::TwoQubitState;

/// Largest supported acceleration parameter, where cos r = sin r.
pub const R_MAX: f64 = FRAC_PI_4;

/// Which qubits are accelerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    None,
    FirstOnly,
    Both,
}

impl Scenario {
    pub fn label(self) -> &'static str {
        match self {
            Scenario::None => "none",
            Scenario::FirstOnly => "first_only",
            Scenario::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationSpec {
    r: f64,
    scenario: Scenario,
}

impl AccelerationSpec {
    pub fn new(r: f64, scenario: Scenario) -> Result<Self> {
        check_r(r)?;
        Ok(Self { r, scenario })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }
}

fn check_r(r: f64) -> Result<()> {
    if !(0.0..=R_MAX).contains(&r) {
        return Err(Error::Domain {
            name: "r",
            value: r,
            domain: "[0, pi/4]",
        });
    }
    Ok(())
}

/// The two Kraus operators of the Unruh channel at acceleration `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrausPair {
    pub k0: Mat2,
    pub k1: Mat2,
}

impl KrausPair {
    /// `K0^H K0 + K1^H K1`, the identity for a trace-preserving channel.
    pub fn completeness(&self) -> Mat2 {
        self.k0.dagger() * self.k0 + self.k1.dagger() * self.k1
    }

    pub fn operators(&self) -> [Mat2; 2] {
        [self.k0, self.k1]
    }
}

/// (|00> + |11>) / sqrt 2.
pub fn bell_phi_plus() -> TwoQubitState {
    TwoQubitState::from_cp_output(Mat4::from_real([
        [0.5, 0.0, 0.0, 0.5],
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [0.5, 0.0, 0.0, 0.5],
    ]))
}

pub fn unruh_kraus(r: f64) -> Result<KrausPair> {
    check_r(r)?;
    let (s, c) = r.sin_cos();
    Ok(KrausPair {
        k0: Mat2::diag([c, 1.0]),
        k1: Mat2::from_real([[0.0, 0.0], [s, 0.0]]),
    })
}

/// `sum_m (K_m (x) I) rho (K_m (x) I)^H` for target A, `I (x) K_m` for B.
pub fn apply_channel(state: &TwoQubitState, kraus: &KrausPair, target: Subsystem) -> TwoQubitState {
    let rho = state.rho();
    let out = kraus
        .operators()
        .iter()
        .map(|k| {
            let lifted = match target {
                Subsystem::A => kron(k, &pauli::ID),
                Subsystem::B => kron(&pauli::ID, k),
            };
            lifted.conjugate(rho)
        })
        .fold(Mat4::zeros(), |acc, term| acc + term);
    TwoQubitState::from_cp_output(out)
}

pub fn accelerate(state: &TwoQubitState, spec: &AccelerationSpec) -> TwoQubitState {
    if spec.scenario == Scenario::None {
        return *state;
    }
    // r was checked when the spec was built
    let kraus = unruh_kraus(spec.r).expect("validated acceleration parameter");
    let once = apply_channel(state, &kraus, Subsystem::A);
    match spec.scenario {
        Scenario::Both => apply_channel(&once, &kraus, Subsystem::B),
        _ => once,
    }
}
