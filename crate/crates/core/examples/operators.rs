//! Convolution kernels and the operators they define.
//!
//! Run with `cargo run --example operators`.

use bohr_radius::bohr::{convergence_radius_bound, radius_to_identity_lower_bound};
use bohr_radius::kernels::{
    derivative_kernel, integral_kernel, Kernel, OperatorSpec, DEFAULT_HORIZON,
};
use bohr_radius::series::TruncatedSeries;

fn main() -> bohr_radius::error::Result<()> {
    let kernels = [
        Kernel::geometric(0),
        derivative_kernel(1),
        derivative_kernel(3),
        integral_kernel(),
    ];
    println!(
        "{:<16} {:>5} {:>12} {:>8} {:>8}",
        "kernel", "m", "inf ratio", "exact", "R_c"
    );
    for k in &kernels {
        let inf = k.inf_ratio(DEFAULT_HORIZON)?;
        let rc = k.radius_of_convergence();
        println!(
            "{:<16} {:>5} {:>12.9} {:>8} {:>8}",
            k.name(),
            k.order(),
            inf.value,
            inf.exact,
            rc.value
        );
    }

    let d2 = OperatorSpec::derivative(2);
    let f = TruncatedSeries::from_real(&[0.0, 0.0, 1.0, 1.0, 1.0, 1.0])?;
    let g = d2.apply(&f)?;
    println!(
        "d^2/2! of z^2 + z^3 + z^4 + z^5: {:?}",
        g.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );
    let back = d2.invert(&g)?;
    println!(
        "inverted back: {:?}",
        back.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );

    let descriptor = d2.descriptor()?;
    println!(
        "descriptor: {}",
        serde_json::to_string(&descriptor).expect("descriptor serializes")
    );

    for m in 1..=3 {
        let spec = OperatorSpec::derivative(m);
        let lower = radius_to_identity_lower_bound(&spec)?;
        let upper = convergence_radius_bound(&spec)?;
        println!(
            "d^{m}/{m}! -> id: {:.9} <= R <= {}",
            lower.value, upper.value
        );
    }
    Ok(())
}
