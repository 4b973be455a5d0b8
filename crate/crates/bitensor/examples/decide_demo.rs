//! Classifies states as product or entangled from the component magnitudes,
//! and shows how the indicator grows as a product state is perturbed.
//!
//! Run with: cargo run --example decide_demo

use bitensor::detect::{decide, nearest_rank_one_gap, DEFAULT_DECISION_TOL};
use bitensor::states::random_state;
use bitensor::{Mat4c, TwoParticleState};
use num_complex::Complex64;

fn show(label: &str, state: &TwoParticleState) {
    let verdict = decide(state, DEFAULT_DECISION_TOL).unwrap();
    println!(
        "{label:<28} {} (max indicator {:.3e}, sigma_2/sigma_1 {:.3e})",
        if verdict.is_product {
            "product  "
        } else {
            "entangled"
        },
        verdict.max_indicator,
        nearest_rank_one_gap(state),
    );
}

fn main() {
    show("random rank-1, seed 3", &random_state(3, 1).unwrap());
    show("random rank-2, seed 3", &random_state(3, 2).unwrap());
    show("random rank-3, seed 3", &random_state(3, 3).unwrap());
    show("random rank-4, seed 3", &random_state(3, 4).unwrap());

    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = Mat4c::zero();
    psi[(0, 1)] = Complex64::new(r, 0.0);
    psi[(1, 0)] = Complex64::new(-r, 0.0);
    show(
        "antisymmetric two-level",
        &TwoParticleState::from_coefficients(psi).unwrap(),
    );

    println!("\nperturbing a basis product state by epsilon in one minor:");
    for exp in [-12, -10, -8, -6, -4, -2] {
        let eps = 10f64.powi(exp);
        let mut psi = Mat4c::zero();
        psi[(0, 0)] = Complex64::new(1.0, 0.0);
        psi[(1, 1)] = Complex64::new(eps, 0.0);
        let state = TwoParticleState::from_coefficients(psi).unwrap();
        show(&format!("epsilon = 1e{exp}"), &state);
    }
    println!(
        "\nindicators scale linearly with the perturbation; the default \
         tolerance {DEFAULT_DECISION_TOL:.0e} sits well above machine noise"
    );
}
