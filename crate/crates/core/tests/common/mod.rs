#![allow(dead_code)]

/// Plain bisection, independent of the library's root finders.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) <= 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `Σ_{n<terms} term(n)` summed from the small end.
pub fn sum(terms: usize, term: impl Fn(usize) -> f64) -> f64 {
    (0..terms).rev().map(term).sum()
}
