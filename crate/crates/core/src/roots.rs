//! One-dimensional root finding and minimization.

use crate::error::{Error, Result};

/// Step of the coarse scan that precedes bisection in [`first_root`].
pub const SCAN_STEP: f64 = 1e-3;

const MAX_BISECTIONS: usize = 2000;

/// Root of `f` on `[lo, hi]` by bisection, refined until the bracket cannot
/// shrink further in double precision. `f(lo)` and `f(hi)` must differ in
/// sign (or one of them vanish).
pub fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(Error::NoRoot(format!(
            "no sign change on [{lo}, {hi}] (f = {flo:e}, {fhi:e})"
        )));
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Smallest root of `f` in `(lo, hi]`: scan with `step` for the first sign
/// change, then bisect inside that cell. Returns the root and the cell.
pub fn first_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> Result<(f64, [f64; 2])> {
    if !(step > 0.0) || !(hi > lo) {
        return Err(Error::InvalidInput(format!(
            "scan needs lo < hi and a positive step, got [{lo}, {hi}] step {step}"
        )));
    }
    let mut a = lo;
    let mut fa = f(a);
    let cells = ((hi - lo) / step).ceil() as usize;
    for k in 1..=cells {
        let b = (lo + step * k as f64).min(hi);
        let fb = f(b);
        if fb == 0.0 || (fa != 0.0 && fa.signum() != fb.signum() && !fb.is_nan()) {
            let root = bisect(&f, a, b)?;
            return Ok((root, [a, b]));
        }
        a = b;
        fa = fb;
    }
    Err(Error::NoRoot(format!("no sign change on ({lo}, {hi}]")))
}

/// Golden-section minimization of a unimodal `f` on `[lo, hi]`.
/// Returns `(argmin, min)`.
pub fn golden_section(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}
