#![allow(dead_code)]

use naqc::{Complex64, Mat2, Mat4, TwoQubitState};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_hermitian(rng: &mut impl Rng) -> Mat4 {
    let g = Mat4::from_fn(|_, _| uniform_complex(rng));
    (g + g.dagger()).scale(0.5)
}

/// `G G^H / tr`, with a random rank between 1 and 4.
pub fn random_state(rng: &mut impl Rng) -> TwoQubitState {
    let rank = rng.gen_range(1..=4);
    let g = Mat4::from_fn(|_, j| {
        if j < rank {
            uniform_complex(rng)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let rho = g * g.dagger();
    let tr = rho.trace().re;
    TwoQubitState::new(rho.scale(1.0 / tr)).expect("random state is valid")
}

pub fn random_unitary2(rng: &mut impl Rng) -> Mat2 {
    let (a, b, c) = (
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::PI),
    );
    let (s, co) = c.sin_cos();
    Mat2::from_rows([
        [Complex64::from_polar(co, a), Complex64::from_polar(s, b)],
        [-Complex64::from_polar(s, -b), Complex64::from_polar(co, -a)],
    ])
}
