//! Bohr radii and Bohr–Bombieri functions of Hadamard convolution operators
//! on bounded analytic functions in the unit disk.
//!
//! For an operator `T₂ = A^{m,l}_h` (convolve with `h`, then multiply by
//! `z^l`) the Bohr–Bombieri function is
//! `m(r) = sup |T₂ M_r f| / ‖T₁ f‖_∞` with `M_r f = Σ |aₙ| rⁿ`, and the Bohr
//! radius is the largest `r` with `m(r) ≤ 1`.
//!
//! * [`series`]: truncated power series, majorants, composition.
//! * [`specfun`]: Lambert W, dilogarithm, hypergeometric coefficients.
//! * [`kernels`]: convolution kernels, operators and kernel pairs.
//! * [`bohr`]: closed-form radii and Bohr–Bombieri values.
//! * [`verify`]: seeded samplers and inequality checks used as oracles.
//! * [`cli`]: the `bohr` command (`radius`, `bombieri`, `verify`, `sweep`).
//!
//! The `examples/` directory has one runnable program per area:
//! `series_basics`, `special_functions`, `operators`, `closed_form_radii`,
//! `integral_bounds`, `empirical_oracle`, `subordination`, `lacunary` and
//! `cli_in_process`.
//!
//! ```
//! use bohr_radius::bohr::{radius_derivative_pair, BuiltinPair};
//!
//! assert!((radius_derivative_pair(0) - 1.0 / 3.0).abs() < 1e-15);
//! let r = BuiltinPair::Id0.radius_with_a(0.75).unwrap();
//! assert!((r.value - 0.4).abs() < 1e-15);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bohr;
pub mod cli;
pub mod error;
pub mod kernels;
pub mod roots;
pub mod series;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
