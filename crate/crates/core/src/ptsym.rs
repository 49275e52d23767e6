//! Local PT-symmetric operations and their normalized non-unitary evolution.
//!
//! `H = [[i sin a, 1], [1, -i sin a]]` squares to `cos^2 a * I`, so
//! `exp(-iHt) = cos(w t) I - i sin(w t) H / w` with `w = cos a`. Written out,
//! this is `sec a * [[cos(a - w t), -i sin(w t)], [-i sin(w t), cos(a + w t)]]`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, Mat2, Mat4};
use crate::state::TwoQubitState;

/// Closest approach of |alpha| to pi/2 before sec(alpha) is treated as overflow.
pub const ALPHA_GUARD: f64 = 1e-6;

/// Normalization traces at or below this are reported as singular.
pub const SINGULAR_TRACE: f64 = 1e-12;

/// Strength `alpha` of the non-Hermitian term and interaction time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTParams {
    alpha: f64,
    t: f64,
}

impl PTParams {
    pub fn new(alpha: f64, t: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::Domain {
                name: "t",
                value: t,
                domain: "[0, inf)",
            });
        }
        if alpha.abs() > FRAC_PI_2 - ALPHA_GUARD {
            return Err(Error::Overflow { alpha });
        }
        Ok(Self { alpha, t })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Effective phase `t cos(alpha)`.
    pub fn phase(&self) -> f64 {
        self.t * self.alpha.cos()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.abs() < FRAC_PI_2) {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha,
            domain: "(-pi/2, pi/2)",
        });
    }
    Ok(())
}

/// Which qubits the local operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PTTarget {
    OnA,
    OnB,
    OnBoth,
}

impl PTTarget {
    pub fn label(self) -> &'static str {
        match self {
            PTTarget::OnA => "on_a",
            PTTarget::OnB => "on_b",
            PTTarget::OnBoth => "on_both",
        }
    }
}

pub fn h_pt(alpha: f64) -> Result<Mat2> {
    check_alpha(alpha)?;
    let s = alpha.sin();
    Ok(Mat2::from_rows([
        [Complex64::new(0.0, s), Complex64::new(1.0, 0.0)],
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, -s)],
    ]))
}

/// `exp(-i H t)` in closed form.
pub fn u_pt(params: &PTParams) -> Mat2 {
    if params.t == 0.0 {
        return Mat2::identity();
    }
    let a = params.alpha;
    let phase = params.phase();
    let sec = 1.0 / a.cos();
    let off = Complex64::new(0.0, -phase.sin() * sec);
    Mat2::from_rows([
        [Complex64::new((a - phase).cos() * sec, 0.0), off],
        [off, Complex64::new((a + phase).cos() * sec, 0.0)],
    ])
}

/// The two-qubit operator applied for `target`.
pub fn lift(u: &Mat2, target: PTTarget) -> Mat4 {
    match target {
        PTTarget::OnA => kron(u, &pauli::ID),
        PTTarget::OnB => kron(&pauli::ID, u),
        PTTarget::OnBoth => kron(u, u),
    }
}

/// `M rho M^H / tr(M rho M^H)` with `M` the lifted evolution operator.
pub fn evolve(state: &TwoQubitState, params: &PTParams, target: PTTarget) -> Result<TwoQubitState> {
    let m = lift(&u_pt(params), target);
    normalize(m.conjugate(state.rho()), params.alpha)
}

fn normalize(numerator: Mat4, alpha: f64) -> Result<TwoQubitState> {
    if !numerator.is_finite() {
        return Err(Error::Overflow { alpha });
    }
    let trace = numerator.trace().re;
    if trace <= SINGULAR_TRACE {
        return Err(Error::SingularEvolution { trace });
    }
    Ok(TwoQubitState::from_cp_output(
        numerator * Complex64::new(1.0 / trace, 0.0),
    ))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    use super::*;
    use crate::unruh::bell_phi_plus;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermitian_limit_is_pauli_x() {
        assert_eq!(h_pt(0.0).unwrap(), pauli::X);
    }

    #[test]
    fn h_at_pi_over_six() {
        let h = h_pt(FRAC_PI_6).unwrap();
        let want = Mat2::from_rows([[c(0.0, 0.5), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, -0.5)]]);
        assert!(h.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn h_conjugation_symmetry() {
        for a in [0.1, FRAC_PI_6, FRAC_PI_3, 1.5] {
            assert_eq!(h_pt(-a).unwrap(), h_pt(a).unwrap().dagger());
        }
    }

    #[test]
    fn h_domain() {
        assert!(matches!(h_pt(FRAC_PI_2), Err(Error::Domain { .. })));
        assert!(h_pt(-2.0).is_err());
        assert!(h_pt(f64::NAN).is_err());
    }

    #[test]
    fn params_domain() {
        assert!(matches!(PTParams::new(FRAC_PI_2, 1.0), Err(Error::Domain { .. })));
        assert!(matches!(
            PTParams::new(FRAC_PI_2 - 1e-8, 1.0),
            Err(Error::Overflow { .. })
        ));
        assert!(PTParams::new(0.3, -1.0).is_err());
        assert!(PTParams::new(0.3, f64::INFINITY).is_err());
        assert!(PTParams::new(-FRAC_PI_3, 2.0).is_ok());
    }

    #[test]
    fn unitary_at_zero_alpha() {
        for t in [0.0, 0.3, 1.0, 2.7, 10.0] {
            let u = u_pt(&PTParams::new(0.0, t).unwrap());
            let want = Mat2::from_rows([
                [c(t.cos(), 0.0), c(0.0, -t.sin())],
                [c(0.0, -t.sin()), c(t.cos(), 0.0)],
            ]);
            assert!(u.max_abs_diff(&want) < 1e-15);
            assert!((u.dagger() * u).max_abs_diff(&Mat2::identity()) < 1e-12);
        }
    }

    #[test]
    fn identity_at_zero_time() {
        for a in [0.0, FRAC_PI_6, FRAC_PI_4, FRAC_PI_3, -1.2] {
            assert_eq!(u_pt(&PTParams::new(a, 0.0).unwrap()), Mat2::identity());
        }
    }

    #[test]
    fn closed_form_squares_correctly() {
        // H^2 = cos^2(a) I
        for a in [0.2, FRAC_PI_4, 1.3] {
            let h = h_pt(a).unwrap();
            let want = Mat2::identity().scale(a.cos().powi(2));
            assert!((h * h).max_abs_diff(&want) < 1e-15);
        }
    }

    #[test]
    fn non_unitary_for_nonzero_alpha() {
        let u = u_pt(&PTParams::new(FRAC_PI_4, 1.0).unwrap());
        assert!((u.dagger() * u).max_abs_diff(&Mat2::identity()) > 0.1);
    }

    #[test]
    fn evolve_at_zero_time_is_identity() {
        let bell = bell_phi_plus();
        let p = PTParams::new(FRAC_PI_3, 0.0).unwrap();
        for target in [PTTarget::OnA, PTTarget::OnB, PTTarget::OnBoth] {
            assert_eq!(evolve(&bell, &p, target).unwrap(), bell);
        }
    }

    #[test]
    fn evolve_renormalizes() {
        let bell = bell_phi_plus();
        let p = PTParams::new(FRAC_PI_3, 1.7).unwrap();
        for target in [PTTarget::OnA, PTTarget::OnB, PTTarget::OnBoth] {
            let out = evolve(&bell, &p, target).unwrap();
            assert!((out.rho().trace().re - 1.0).abs() < 1e-12);
            assert!(out.rho().hermiticity_defect() < 1e-11);
        }
    }

    #[test]
    fn normalization_rejects_vanishing_trace() {
        assert!(matches!(
            normalize(Mat4::zeros(), 0.3),
            Err(Error::SingularEvolution { .. })
        ));
        let mut nan = Mat4::identity();
        nan[(0, 0)] = c(f64::INFINITY, 0.0);
        assert!(matches!(normalize(nan, 1.57), Err(Error::Overflow { .. })));
    }

    #[test]
    fn evolution_operator_has_unit_determinant() {
        for (a, t) in [(FRAC_PI_6, 0.4), (FRAC_PI_3, 7.0), (-1.0, 3.3)] {
            let u = u_pt(&PTParams::new(a, t).unwrap());
            let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
            assert!((det - c(1.0, 0.0)).norm() < 1e-12);
        }
    }
}
