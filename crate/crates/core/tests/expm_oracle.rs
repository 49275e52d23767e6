//! Closed-form evolution operator against a scaling-and-squaring Taylor series.

mod common;

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

use naqc::{h_pt, u_pt, Complex64, Mat2, PTParams};
use rand::Rng;

/// `exp(a)` by halving until the norm is below 1/2, summing 30 Taylor terms,
/// and squaring back.
fn series_exp(a: &Mat2) -> Mat2 {
    let mut halvings = 0;
    let mut scaled = *a;
    while scaled.frobenius_norm() > 0.5 {
        scaled = scaled.scale(0.5);
        halvings += 1;
    }
    let mut term = Mat2::identity();
    let mut sum = Mat2::identity();
    for k in 1..30 {
        term = (term * scaled).scale(1.0 / k as f64);
        sum = sum + term;
    }
    for _ in 0..halvings {
        sum = sum * sum;
    }
    sum
}

fn oracle(alpha: f64, t: f64) -> Mat2 {
    series_exp(&(h_pt(alpha).unwrap() * Complex64::new(0.0, -t)))
}

#[test]
fn series_sanity() {
    // exp(-i X t) = cos t I - i sin t X
    let t = 0.7_f64;
    let e = oracle(0.0, t);
    let want = Mat2::from_rows([
        [Complex64::new(t.cos(), 0.0), Complex64::new(0.0, -t.sin())],
        [Complex64::new(0.0, -t.sin()), Complex64::new(t.cos(), 0.0)],
    ]);
    assert!(e.max_abs_diff(&want) < 1e-14);
}

#[test]
fn closed_form_at_quarter_pi() {
    let u = u_pt(&PTParams::new(FRAC_PI_4, 0.5).unwrap());
    assert!(u.max_abs_diff(&oracle(FRAC_PI_4, 0.5)) < 1e-9);
}

#[test]
fn closed_form_matches_series_on_random_samples() {
    let mut rng = common::rng(5);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let alpha = rng.gen_range(-FRAC_PI_3..=FRAC_PI_3);
        let t = rng.gen_range(0.0..=10.0);
        let u = u_pt(&PTParams::new(alpha, t).unwrap());
        worst = worst.max(u.max_abs_diff(&oracle(alpha, t)));
    }
    assert!(worst < 1e-9, "worst deviation {worst:e}");
}

#[test]
fn unitary_in_hermitian_limit() {
    for i in 0..=100 {
        let t = 10.0 * i as f64 / 100.0;
        let u = u_pt(&PTParams::new(0.0, t).unwrap());
        assert!((u.dagger() * u).max_abs_diff(&Mat2::identity()) < 1e-12);
    }
}
