//! Truncated power series: majorants, Hadamard products, composition.
//!
//! Run with `cargo run --example series_basics`.

use bohr_radius::series::TruncatedSeries;
use num_complex::Complex64;

fn main() -> bohr_radius::error::Result<()> {
    let order = 64;
    let geo = TruncatedSeries::geometric(order);
    let auto = TruncatedSeries::disc_automorphism(0.5, 0, order)?;

    println!("majorant of (z + 1/2)/(1 + z/2):");
    for r in [0.2, 1.0 / 3.0, 0.5] {
        println!("  r = {r:.4}  M_r = {:.10}", auto.majorant(r));
    }

    // hadamard with 1/(1-z) is the identity
    let same = geo.hadamard(&auto);
    assert!(same
        .coeffs()
        .iter()
        .zip(auto.coeffs())
        .all(|(a, b)| (a - b).norm() < 1e-15));

    let z2 = TruncatedSeries::monomial(2, order);
    let composed = auto.compose(&z2)?;
    let z = Complex64::new(0.3, 0.4);
    println!(
        "f(z^2) at {z}: series {:.12}, direct {:.12}",
        composed.evaluate(z),
        auto.evaluate(z * z)
    );

    println!(
        "sup-norm estimate of the automorphism: {:.9}",
        auto.sup_norm_estimate(1024)?
    );
    Ok(())
}
