//! Majorant comparison for subordinate and majorized functions after an
//! operator is applied, and the sharpness of the radius 1/3.
//!
//! Run with `cargo run --release --example subordination`.

use bohr_radius::bohr::radius_to_identity_lower_bound;
use bohr_radius::kernels::OperatorSpec;
use bohr_radius::series::TruncatedSeries;
use bohr_radius::verify::{
    check_majorization_majorant, check_subordination_majorant, majorization_sharpness,
    random_polynomial, sample_rng, SchwarzMap, SelfMap,
};

fn main() -> bohr_radius::error::Result<()> {
    let order = 256;
    let spec = OperatorSpec::derivative(1);
    let radius = radius_to_identity_lower_bound(&spec)?.value;
    let r = 0.95 * radius;
    println!("T = d/dz on functions vanishing at 0, R >= {radius:.6}, testing at r = {r:.6}");

    let mut worst_sub = f64::INFINITY;
    let mut worst_maj = f64::INFINITY;
    for i in 0..200 {
        let mut rng = sample_rng(42, i);
        let g = random_polynomial(&mut rng, 1, order);
        let omega = SchwarzMap::random(i, 3, order);
        worst_sub = worst_sub.min(check_subordination_majorant(&spec, &g, &omega, r)?.margin());
        let a = 0.9 * (i as f64) / 200.0;
        let phi = SelfMap::new(TruncatedSeries::disc_automorphism(a, 0, order)?)?;
        worst_maj = worst_maj.min(check_majorization_majorant(&spec, &g, &phi, r)?.margin());
    }
    println!(
        "smallest margin M_r(Tg) - M_r f: subordinate {worst_sub:.3e}, majorized {worst_maj:.3e}"
    );

    let id = OperatorSpec::identity(0);
    for r in [1.0 / 3.0, 1.0 / 3.0 + 0.01] {
        let s = majorization_sharpness(&id, r, 2000, order)?;
        println!(
            "identity, r = {r:.4}: largest excess {:.3e} at a = {:.4}",
            s.violation, s.a
        );
    }
    Ok(())
}
