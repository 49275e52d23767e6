//! Fixed inputs shared by the benchmarks, so timings are comparable run to run.

use std::f64::consts::FRAC_PI_3;

use naqc::sweep::{figure_preset, SweepSpec};
use naqc::{
    accelerate, bell_phi_plus, evolve, AccelerationSpec, PTParams, PTTarget, Scenario, TwoQubitState,
};

/// Both-accelerated Bell pairs at `n` accelerations, then evolved with the
/// operation on both qubits at alpha = pi/3: entangled, mixed, and full rank.
pub fn sample_states(n: usize) -> Vec<TwoQubitState> {
    let params = PTParams::new(FRAC_PI_3, 0.9).expect("fixed parameters are valid");
    (0..n)
        .map(|i| {
            let r = 0.7 * i as f64 / n.max(1) as f64;
            let accel = AccelerationSpec::new(r, Scenario::Both).expect("r within range");
            let state = accelerate(&bell_phi_plus(), &accel);
            evolve(&state, &params, PTTarget::OnBoth).expect("evolution is regular")
        })
        .collect()
}

/// The heaviest preset curve: naqc over a time sweep, both qubits operated on.
pub fn heavy_curve() -> SweepSpec {
    figure_preset("fig14c").expect("known preset").curves[2]
        .spec
        .clone()
}
