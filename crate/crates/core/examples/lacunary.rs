//! Lacunary selection `f ↦ Σ a_{1+km} z^{1+km}`: the automorphism closed form,
//! functions of the form `z G(z^m)` that exceed it for `m ≥ 2`, and the
//! radius `3^{-1/m}` as `a → 1`.
//!
//! Run with `cargo run --release --example lacunary`.

use bohr_radius::bohr::{radius_lacunary_with_a, BuiltinPair};
use bohr_radius::verify::{empirical_bombieri, lacunary_sharpness};

fn main() -> bohr_radius::error::Result<()> {
    let order = 512;
    for m in 1..=3 {
        let pair = BuiltinPair::Lacunary(m);
        let conv = pair.convolution();
        let (a, r) = (0.9, 0.6);
        let closed = pair.closed_form(r, a);
        let sampled =
            empirical_bombieri(&conv.source(), &conv.target(), r, Some(a), 500, 3, order)?;
        let lifted = a + (1.0 / a - a) * a * r.powi(m as i32) / (1.0 - a * r.powi(m as i32));
        println!(
            "m = {m}: closed form {closed:.8}, sampled {sampled:.8}, z G(z^m) family {lifted:.8}"
        );
        if let Ok(res) = radius_lacunary_with_a(m, 0.99) {
            println!("        R(0.99) from the closed form: {:.8}", res.value);
        }
    }

    let edge = 3f64.sqrt().recip();
    for r in [edge - 0.005, edge + 0.005] {
        let s = lacunary_sharpness(2, r, 2000, order)?;
        println!(
            "m = 2, r = {r:.6}: largest excess {:.3e} at a = {:.4}",
            s.violation, s.a
        );
    }
    Ok(())
}
