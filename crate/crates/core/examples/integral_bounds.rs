//! Bounds on the Bohr radius of the derivative-to-function comparison, and
//! the curve r(a) that gives the exact radius for large a.
//!
//! Run with `cargo run --example integral_bounds`.

use bohr_radius::bohr::{
    integral_curve, integral_threshold, radius_integral_lower, radius_integral_upper,
    radius_integral_with_a,
};

fn main() -> bohr_radius::error::Result<()> {
    let lower = radius_integral_lower()?;
    let (upper, a_min) = radius_integral_upper()?;
    println!("{lower:.6} <= R <= {upper:.6}   (curve minimum at a = {a_min:.6})");

    let threshold = integral_threshold()?;
    println!("r(a) = a at a = {threshold:.6}");

    println!("\n{:>6} {:>12} {:>8}", "a", "r(a)", "r < a");
    for k in 0..=10 {
        let a = 0.85 + 0.015 * k as f64;
        let r = integral_curve(a)?;
        println!("{a:>6.3} {r:>12.9} {:>8}", r < a);
    }

    let exact = radius_integral_with_a(0.95)?;
    println!(
        "\nR(0.95) = {:.10}, residual {:.1e}",
        exact.value, exact.residual
    );
    match radius_integral_with_a(0.5) {
        Ok(_) => unreachable!("a = 0.5 is below the threshold"),
        Err(e) => println!("R(0.5): {e}"),
    }
    Ok(())
}
