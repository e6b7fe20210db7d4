//! Closed-form Bohr radii, with and without a fixed first coefficient.
//!
//! Run with `cargo run --example closed_form_radii`.

use bohr_radius::bohr::{
    bombieri_id0, cesaro_bombieri_bound, cesaro_bound_limit, radius_derivative_pair,
    radius_hypergeometric, theorem_b_radius, BuiltinPair,
};
use bohr_radius::specfun::HypergeometricParams;

fn main() -> bohr_radius::error::Result<()> {
    println!("derivative pairs without a fixed coefficient:");
    for m in 0..=4 {
        println!("  m = {m}: R = {:.10}", radius_derivative_pair(m));
    }

    println!("\nR(a) for id0 and the first derivative:");
    for a in [0.6, 0.7, 0.8, 0.9, 1.0] {
        let id0 = BuiltinPair::Id0.radius_with_a(a)?;
        let d1 = BuiltinPair::Derivative(1).radius_with_a(a)?;
        println!("  a = {a:.2}: id0 {:.10}  d/dz {:.10}", id0.value, d1.value);
    }

    println!("\nm_id0(r):");
    for r in [0.2, 1.0 / 3.0, 0.5, 0.7] {
        println!("  r = {r:.4}: {:.10}", bombieri_id0(r)?);
    }
    if let Err(e) = bombieri_id0(0.8) {
        println!("  r = 0.8: {e}");
    }

    let limit = cesaro_bound_limit()?;
    println!(
        "\nCesaro bound holds up to r = {limit:.6}; at r = 0.5 it is {:.10}",
        cesaro_bombieri_bound(0.5)?
    );

    let hyp = radius_hypergeometric(HypergeometricParams::new(1.0, 1.0, 1.0)?)?;
    println!("hypergeometric F(1,1,1): R = {:.10}", hyp.value);
    let geo = theorem_b_radius(|n, x| x.powi(n as i32), 0, |x| x / (1.0 - x), 1.0)?;
    println!("geometric profile, p = 1: R = {:.10}", geo.value);
    Ok(())
}
