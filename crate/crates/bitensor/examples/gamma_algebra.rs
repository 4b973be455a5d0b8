//! Prints the gamma matrix family and checks its defining relations, all of
//! which hold exactly because every entry is a Gaussian integer.
//!
//! Run with: cargo run --example gamma_algebra

use bitensor::clifford::{
    charge_conjugation, gamma, gamma5, gammas, generator, GeneratorIndex, METRIC_DIAG,
};
use bitensor::Mat4c;

fn main() {
    for mu in 0..4 {
        println!("gamma^{mu} =\n{}", gamma(mu).unwrap());
    }
    println!("C = i gamma^1 gamma^3 =\n{}", charge_conjugation());
    println!("gamma^5 =\n{}", gamma5());

    let g = gammas();
    let c = charge_conjugation();
    let g5 = gamma5();
    let id = Mat4c::identity();

    let mut worst = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let anti = g[mu] * g[nu] + g[nu] * g[mu];
            let expected = if mu == nu {
                id.scale(2.0 * METRIC_DIAG[mu])
            } else {
                Mat4c::zero()
            };
            worst = worst.max(anti.max_diff(&expected));
        }
    }
    println!("anticommutation residual over 16 index pairs: {worst:e}");

    let mut worst = 0.0f64;
    for gm in g {
        worst = worst.max((c * gm).max_diff(&(gm.transpose() * c)));
        worst = worst.max((g5 * gm + gm * g5).max_diff(&Mat4c::zero()));
    }
    println!("transpose intertwiner and gamma^5 anticommutation residual: {worst:e}");

    println!(
        "C antisymmetric: {}, C^2 = 1: {}, gamma^5 symmetric: {}, (gamma^5)^2 = 1: {}",
        c.transpose().max_diff(&-c) == 0.0,
        (c * c).max_diff(&id) == 0.0,
        g5.transpose().max_diff(&g5) == 0.0,
        (g5 * g5).max_diff(&id) == 0.0,
    );

    let mut worst = 0.0f64;
    for idx in GeneratorIndex::upper_pairs() {
        let s = generator(idx);
        worst = worst.max((s.transpose() * c).max_diff(&-(c * s)));
    }
    println!("generator transpose relation residual over 6 generators: {worst:e}");
}
