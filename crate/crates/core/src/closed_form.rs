//! Published element-by-element closed forms for the accelerated and evolved
//! states, transcribed literally (including their conjugation relations).
//!
//! Nothing in the computation path uses these. They exist so the direct
//! matrix algebra can be compared against them, residuals and all.
//! The two tables for a local operation on both qubits use the phase
//! `t cos^2(alpha)` exactly as published, even though the evolution operator
//! itself carries `t cos(alpha)`.

use num_complex::Complex64;

use crate::linalg::Mat4;

type C = Complex64;

fn re(x: f64) -> C {
    C::new(x, 0.0)
}

fn im(x: f64) -> C {
    C::new(0.0, x)
}

/// Fills a 4x4 matrix from 1-based `(row, col, value)` entries.
fn assemble(entries: &[(usize, usize, C)]) -> Mat4 {
    let mut m = Mat4::zeros();
    let mut seen = [[false; 4]; 4];
    for &(i, j, z) in entries {
        debug_assert!(!seen[i - 1][j - 1], "duplicate entry ({i},{j})");
        seen[i - 1][j - 1] = true;
        m[(i - 1, j - 1)] = z;
    }
    debug_assert!(seen.iter().flatten().all(|&s| s), "missing entries");
    m
}

/// First qubit accelerated, as published: the `sin^2 r / 2` population sits
/// at row/column 2.
pub fn accel_first(r: f64) -> Mat4 {
    let (s, c) = r.sin_cos();
    Mat4::from_real([
        [c * c / 2.0, 0.0, 0.0, c / 2.0],
        [0.0, s * s / 2.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [c / 2.0, 0.0, 0.0, 0.5],
    ])
}

/// Both qubits accelerated.
pub fn accel_both(r: f64) -> Mat4 {
    let (s, c) = r.sin_cos();
    let mu = s.powi(4) + 1.0;
    let s2r = (2.0 * r).sin().powi(2);
    Mat4::from_real([
        [c.powi(4) / 2.0, 0.0, 0.0, c * c / 2.0],
        [0.0, s2r / 8.0, 0.0, 0.0],
        [0.0, 0.0, s2r / 8.0, 0.0],
        [c * c / 2.0, 0.0, 0.0, mu / 2.0],
    ])
}

/// Shorthands shared by the single-qubit-operation tables.
struct OneSided {
    delta: f64,
    beta: f64,
    nu: f64,
    sec: f64,
    phase: f64,
}

impl OneSided {
    fn new(alpha: f64, t: f64) -> Self {
        let phase = t * alpha.cos();
        let sec = 1.0 / alpha.cos();
        Self {
            delta: alpha.tan() * phase.sin() + phase.cos(),
            beta: (alpha + phase).cos(),
            nu: sec * phase.sin(),
            sec,
            phase,
        }
    }
}

/// First qubit accelerated, operation on the first qubit.
pub fn first_pt_one(r: f64, alpha: f64, t: f64) -> Mat4 {
    let OneSided {
        delta,
        beta,
        nu,
        sec,
        phase,
    } = OneSided::new(alpha, t);
    let (s, c) = r.sin_cos();
    let tan = alpha.tan();
    let z = sec * sec - tan * tan * (2.0 * phase).cos();
    let k = 1.0 / (2.0 * z);

    let r12 = im(nu * delta * k * c);
    let r13 = im(nu * delta * k * c * c);
    let r14 = re(beta * delta * k * sec * c);
    let r23 = re(nu * nu * k * c);
    let r24 = im(-nu * k * (sec * beta - s * s * delta));
    let r34 = im(-beta * k * sec * sec * phase.sin() * c);
    assemble(&[
        (1, 1, re(delta * delta * k * c * c)),
        (1, 2, r12),
        (1, 3, r13),
        (1, 4, r14),
        (2, 2, re(k * (nu * nu + s * s * delta * delta))),
        (2, 3, r23),
        (2, 4, r24),
        (3, 3, re(nu * nu * k * c * c)),
        (3, 4, r34),
        (
            4,
            4,
            re(k * sec * sec * (beta * beta + phase.sin().powi(2) * s * s)),
        ),
        (2, 1, r12.conj()),
        (3, 1, r13.conj()),
        (3, 2, r23),
        (4, 1, r14),
        (4, 2, r24.conj()),
        (4, 3, r34.conj()),
    ])
}

/// First qubit accelerated, operation on both qubits.
pub fn first_pt_both(r: f64, alpha: f64, t: f64) -> Mat4 {
    let phase2 = t * alpha.cos().powi(2);
    let sec = 1.0 / alpha.cos();
    let sec2 = sec * sec;
    let tan = alpha.tan();
    let tan2 = tan * tan;
    let sin2a = alpha.sin().powi(2);
    let xi = sec * phase2.sin();
    let xi2 = xi * xi;
    let (s, c) = r.sin_cos();
    let s2 = s * s;
    let omega = c - 1.0;
    let half = (r / 2.0).sin().powi(2);
    let cos2r = (2.0 * r).cos();
    let (sp, cp) = phase2.sin_cos();
    let z = 8.0 * tan2 * xi2 * half + 1.0;
    let e_minus = C::from_polar(1.0, -phase2);
    let e_plus = C::from_polar(1.0, phase2);

    let r11 =
        re((xi2 * sec2 + xi2 * sin2a * c * c + xi2 * tan2 * (s2 - 2.0 * c) + cp * cp * c * c) / (2.0 * z));
    let r12 = re(xi / z * tan * half) * C::new(cp, (2.0 * sec2 - 1.0) * sp);
    let r13 = re(xi / (4.0 * z) * tan) * (e_minus * (-2.0 * c + cos2r + 1.0) - im(4.0 * sec2 * sp * omega));
    let r14 =
        (re(-2.0 * xi2 * tan2 + c * (xi2 * (sin2a + sec2) + cp * cp)) - im(xi * sec * cp * s2)) / (2.0 * z);
    let r21 = re(tan * xi * half / (2.0 * z)) * C::new(2.0 * cp, xi * sec * ((2.0 * alpha).cos() - 3.0));
    // the second term sits outside the 1/(2Z) prefactor as published
    let r22 = re(s2 * (xi2 * sin2a + cp * cp) / (2.0 * z) + 2.0 * tan2 * xi2 * half * half);
    let r23 = re(xi * sec / (2.0 * z)) * C::new(-2.0 * tan2 * sp * omega, cp * s2);
    let r24 = re(tan * xi * half / (4.0 * z)) * C::new(-4.0 * cp * (c + 2.0), -4.0 * sp * (c - 2.0 * tan2));
    let r31 = re(xi * tan / (4.0 * z)) * (im(4.0 * xi * sec * omega) + e_plus * (-2.0 * c + cos2r + 1.0));
    let r33 = re(xi2 / (2.0 * z) * sec2 * half * ((2.0 * alpha).cos() * omega + c + 3.0));
    let r34 = im(xi / z * tan * half) * C::new((2.0 * sec2 - 1.0) * sp, cp);
    let r43 = im(xi / z * tan * half) * C::new(-2.0 * xi * sec + sp, cp);
    let r44 = re(
        (2.0 * cp * cp + xi2 * (4.0 * sec2 + (-4.0 * tan2 * c + cos2r - 5.0) + 2.0 * sp * sp)) / (4.0 * z),
    );
    assemble(&[
        (1, 1, r11),
        (1, 2, r12),
        (1, 3, r13),
        (1, 4, r14),
        (2, 1, r21),
        (2, 2, r22),
        (2, 3, r23),
        (2, 4, r24),
        (3, 1, r31),
        (3, 3, r33),
        (3, 4, r34),
        (4, 3, r43),
        (4, 4, r44),
        (3, 2, r23),
        (4, 1, r14.conj()),
        (4, 2, r24.conj()),
    ])
}

/// Both qubits accelerated, operation on the first qubit.
pub fn both_pt_one(r: f64, alpha: f64, t: f64) -> Mat4 {
    let OneSided {
        delta,
        beta,
        nu,
        sec,
        phase,
    } = OneSided::new(alpha, t);
    let (s, c) = r.sin_cos();
    let c2 = c * c;
    let c4 = c2 * c2;
    let s2r = (2.0 * r).sin().powi(2);
    let mu = s.powi(4) + 1.0;
    let tan = alpha.tan();
    let sp2 = phase.sin().powi(2);
    let z = sec * sec - tan * (tan * (2.0 * phase).cos() + (2.0 * phase).sin() * s * s);

    let r12 = im(delta * nu / (2.0 * z) * c2);
    let r13 = im(-nu / (8.0 * z) * (sec * s2r * beta - 4.0 * c4 * delta));
    let r14 = re(beta * delta / (2.0 * z) * sec * c2);
    let r23 = re(nu * nu / (2.0 * z) * c2);
    let r24 = im(-nu / (8.0 * z) * (4.0 * sec * mu * beta - s2r * delta));
    let r34 = im(-beta / (2.0 * z) * sec * sec * phase.sin() * c2);
    assemble(&[
        (1, 1, re((nu * nu * s2r + 4.0 * c4 * delta * delta) / (8.0 * z))),
        (1, 2, r12),
        (1, 3, r13),
        (1, 4, r14),
        (
            2,
            2,
            re(sec * sec * (s2r * (alpha - phase).cos().powi(2) + 4.0 * sp2 * mu) / (8.0 * z)),
        ),
        (2, 3, r23),
        (2, 4, r24),
        (
            3,
            3,
            re(sec * sec * (s2r * beta * beta + 4.0 * sp2 * c4) / (8.0 * z)),
        ),
        (3, 4, r34),
        (
            4,
            4,
            re(sec * sec * (4.0 * mu * beta * beta + sp2 * s2r) / (8.0 * z)),
        ),
        // published without conjugation
        (2, 1, r12),
        (3, 1, r13.conj()),
        (3, 2, r23),
        (4, 1, r14),
        (4, 2, r24.conj()),
        (4, 3, r34.conj()),
    ])
}

/// Both qubits accelerated, operation on both qubits.
pub fn both_pt_both(r: f64, alpha: f64, t: f64) -> Mat4 {
    let phase2 = t * alpha.cos().powi(2);
    let (sp, cp) = phase2.sin_cos();
    let sec = 1.0 / alpha.cos();
    let sec2 = sec * sec;
    let sec4 = sec2 * sec2;
    let tan = alpha.tan();
    let tan2 = tan * tan;
    let tan4 = tan2 * tan2;
    let xi = sec * sp;
    let (s, c) = r.sin_cos();
    let s2 = s * s;
    let c2 = c * c;
    let c4 = c2 * c2;
    let mu = s2 * s2 + 1.0;
    let cos2a = (2.0 * alpha).cos();
    let gamma = sp * sp * s2;
    let z = 4.0 * tan2 * sec2 * gamma + 1.0;
    let b1 = sp * sp * (tan4 + sec4) + cp * cp;
    let lambda = C::new(-cp, tan2 * sp);

    let r12 = im(gamma / z * tan * sec2 * sec);
    let r14 = C::new(-2.0 * tan2 * xi * xi + b1 * c2, -2.0 * xi * sec * cp * s2) / (2.0 * z);
    let diag_mid = re(sec2
        * s2
        * (-4.0 * tan2 * (2.0 * phase2).cos() + 4.0 * sec2 + 2.0 * cos2a * c2 + (2.0 * r).cos() - 3.0)
        / (8.0 * z));
    let r23 = re(gamma / z * tan2 * sec2);
    let r24 = lambda * (xi / z * tan * s2);
    let r34 = lambda * (tan * xi * s2 / z);
    let r41 = (re(c2) - re(2.0 * sec2 * sp * s2) * C::new(tan2 * sp, -cp)) / (2.0 * z);
    let r44 = re((sp * sp * (tan4 * mu + cos2a * sec4 * c4) + mu * cp * cp) / (2.0 * z));
    assemble(&[
        (1, 1, re((sec4 * gamma + c4 / 2.0) / z)),
        (1, 2, r12),
        (1, 4, r14),
        (2, 2, diag_mid),
        (2, 3, r23),
        (2, 4, r24),
        (3, 3, diag_mid),
        (3, 4, r34),
        (4, 1, r41),
        (4, 4, r44),
        (2, 1, r12.conj()),
        (1, 3, r12),
        (3, 1, r12.conj()),
        (3, 2, r23),
        (4, 2, r24.conj()),
        (4, 3, r34.conj()),
    ])
}
