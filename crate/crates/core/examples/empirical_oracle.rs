//! Compares closed-form Bohr-Bombieri values with the supremum over seeded
//! samples of bounded functions.
//!
//! Run with `cargo run --release --example empirical_oracle`.

use bohr_radius::bohr::{bombieri_value_thm1, BuiltinPair};
use bohr_radius::verify::{automorphism_value, empirical_bombieri};

fn main() -> bohr_radius::error::Result<()> {
    let (samples, seed, order) = (2000, 1, 256);
    let cases = [
        (BuiltinPair::Id0, 0.8, 0.4),
        (BuiltinPair::Derivative(1), 0.9, 0.3),
        (BuiltinPair::Derivative(2), 0.7, 0.2),
        (BuiltinPair::Integral, 0.95, 0.9),
    ];
    println!(
        "{:<18} {:>5} {:>5} {:>13} {:>13} {:>13}",
        "pair", "a", "r", "closed form", "sampled", "automorphism"
    );
    for (pair, a, r) in cases {
        let conv = pair.convolution();
        let closed = bombieri_value_thm1(&conv, a, r)?;
        let sampled = empirical_bombieri(
            &conv.source(),
            &conv.target(),
            r,
            Some(a),
            samples,
            seed,
            order,
        )?;
        let auto = automorphism_value(&conv.target(), r, a, order)?;
        println!(
            "{:<18} {a:>5} {r:>5} {closed:>13.10} {sampled:>13.10} {auto:>13.10}",
            pair.name()
        );
    }
    Ok(())
}
