//! Lambert W, the dilogarithm and hypergeometric coefficients.
//!
//! Run with `cargo run --example special_functions`.

use bohr_radius::specfun::{
    dilog, hypergeometric_coeffs, lambert_w, pochhammer, HypergeometricParams,
};
use std::f64::consts::E;

fn main() -> bohr_radius::error::Result<()> {
    for x in [-1.0 / E, -2.0 / (E * E), 0.0, 1.0, E, 100.0] {
        let w = lambert_w(x)?;
        println!(
            "W({x:>10.6}) = {w:>12.9}   w e^w - x = {:.1e}",
            w * w.exp() - x
        );
    }

    println!(
        "Li2(1) = {:.15}  (pi^2/6 = {:.15})",
        dilog(1.0)?,
        std::f64::consts::PI.powi(2) / 6.0
    );
    println!("Li2(1/2) = {:.15}", dilog(0.5)?);

    println!("(1/2)_4 = {}", pochhammer(0.5, 4));
    let p = HypergeometricParams::new(0.5, 1.0, 1.5)?;
    let g = hypergeometric_coeffs(&p, 6)?;
    println!("F(1/2, 1, 3/2; x) coefficients: {g:?}");
    Ok(())
}
