//! The Jacobi solver against characteristic-polynomial root isolation.

mod common;

use naqc::linalg::{kron, partial_transpose, swap_subsystems};
use naqc::{hermitian_eigenvalues, Mat4, Subsystem};
use proptest::prelude::*;

/// Real coefficients `c[0] + c[1] x + ... + c[4] x^4` of `det(x I - A)`,
/// by the Faddeev-LeVerrier recursion.
fn characteristic_polynomial(a: &Mat4) -> [f64; 5] {
    let mut c = [0.0; 5];
    c[4] = 1.0;
    let mut m = Mat4::zeros();
    for k in 1..=4 {
        m = *a * m + Mat4::identity().scale(c[5 - k]);
        c[4 - k] = -(*a * m).trace().re / k as f64;
    }
    c
}

fn eval(poly: &[f64], x: f64) -> f64 {
    poly.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(poly: &[f64]) -> Vec<f64> {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

fn bisect(poly: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = eval(poly, lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let f_mid = eval(poly, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

/// All real roots of a polynomial with only real, simple roots. The roots of
/// the derivative split the line into intervals holding one root each.
fn real_roots(poly: &[f64]) -> Vec<f64> {
    let degree = poly.len() - 1;
    let lead = poly[degree];
    if degree == 1 {
        return vec![-poly[0] / lead];
    }
    let bound = 1.0
        + poly[..degree]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut edges = vec![-bound];
    edges.extend(real_roots(&derivative(poly)));
    edges.push(bound);

    edges
        .windows(2)
        .filter_map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let (f_lo, f_hi) = (eval(poly, lo), eval(poly, hi));
            if f_lo == 0.0 {
                Some(lo)
            } else if (f_lo < 0.0) != (f_hi < 0.0) {
                Some(bisect(poly, lo, hi))
            } else {
                None
            }
        })
        .collect()
}

fn oracle_eigenvalues(a: &Mat4) -> Vec<f64> {
    let mut roots = real_roots(&characteristic_polynomial(a));
    roots.sort_by(f64::total_cmp);
    roots
}

#[test]
fn oracle_sanity() {
    let roots = oracle_eigenvalues(&Mat4::diag([-1.5, 0.25, 2.0, 3.0]));
    assert_eq!(roots.len(), 4);
    for (got, want) in roots.iter().zip([-1.5, 0.25, 2.0, 3.0]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn jacobi_matches_polynomial_roots_on_random_hermitian() {
    let mut rng = common::rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = common::random_hermitian(&mut rng);
        let jacobi = hermitian_eigenvalues(&a).unwrap().eigenvalues;
        let oracle = oracle_eigenvalues(&a);
        assert_eq!(oracle.len(), 4, "oracle lost a root for {a:?}");
        for (x, y) in jacobi.iter().zip(&oracle) {
            worst = worst.max((x - y).abs());
        }
    }
    assert!(worst < 1e-8, "worst deviation {worst:e}");
}

#[test]
fn trace_and_square_identities() {
    let mut rng = common::rng(11);
    for _ in 0..1000 {
        let a = common::random_hermitian(&mut rng);
        let spectrum = hermitian_eigenvalues(&a).unwrap();
        assert!((spectrum.sum() - a.trace().re).abs() < 1e-10);
        let squares: f64 = spectrum.eigenvalues.iter().map(|x| x * x).sum();
        assert!((squares - (a * a).trace().re).abs() < 1e-9);
        assert!(spectrum.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn partial_transpose_spectrum_is_side_independent() {
    let mut rng = common::rng(13);
    for _ in 0..200 {
        let s = common::random_state(&mut rng);
        let on_a = hermitian_eigenvalues(&partial_transpose(s.rho(), Subsystem::A)).unwrap();
        let on_b = hermitian_eigenvalues(&partial_transpose(s.rho(), Subsystem::B)).unwrap();
        for (x, y) in on_a.eigenvalues.iter().zip(on_b.eigenvalues) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}

fn complex_entries() -> impl Strategy<Value = Vec<(f64, f64)>> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 16)
}

fn mat4(entries: &[(f64, f64)]) -> Mat4 {
    Mat4::from_fn(|i, j| {
        let (re, im) = entries[4 * i + j];
        naqc::Complex64::new(re, im)
    })
}

proptest! {
    #[test]
    fn partial_transpose_is_trace_preserving_involution(entries in complex_entries()) {
        let m = mat4(&entries);
        for side in [Subsystem::A, Subsystem::B] {
            let pt = partial_transpose(&m, side);
            prop_assert_eq!(partial_transpose(&pt, side), m);
            prop_assert!((pt.trace() - m.trace()).norm() < 1e-15);
        }
    }

    #[test]
    fn kron_ordering_contract(a in complex_entries(), b in complex_entries()) {
        let a2 = naqc::Mat2::from_fn(|i, j| naqc::Complex64::new(a[2 * i + j].0, a[2 * i + j].1));
        let b2 = naqc::Mat2::from_fn(|i, j| naqc::Complex64::new(b[2 * i + j].0, b[2 * i + j].1));
        let k = kron(&a2, &b2);
        for (i, j, p, q) in index_quads() {
            prop_assert_eq!(k[(2 * i + p, 2 * j + q)], a2[(i, j)] * b2[(p, q)]);
        }
        prop_assert_eq!(swap_subsystems(&k), kron(&b2, &a2));
    }
}

fn index_quads() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1))
}
