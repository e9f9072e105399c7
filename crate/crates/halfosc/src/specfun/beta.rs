//! The alternating series β(x) = Σ_{k≥0} (−1)^k/(x+k).
//!
//! The alternating form converges too slowly to sum directly; it is read as
//! its pairwise-grouped positive-term form
//! `β(x) = Σ_{k≥0} 1/((x+2k)(x+2k+1))`, which is also what the sign
//! analysis of the normalization constant relies on. Two independent
//! routes are provided: the digamma identity
//! `β(x) = (ψ((x+1)/2) − ψ(x/2))/2` (primary) and the grouped series with
//! an integral tail estimate ([`beta_series_direct`], kept as a
//! cross-check).

use super::{digamma, near_nonpositive_integer, SpecialValue};

/// β(x) via the digamma identity. Poles at the nonpositive integers.
/// Absolute accuracy better than 1e-12 away from poles.
pub fn beta_series(x: f64) -> SpecialValue {
    assert!(x.is_finite(), "beta_series: argument must be finite");
    if near_nonpositive_integer(x) {
        return SpecialValue::pole();
    }
    let a = digamma(0.5 * (x + 1.0));
    let b = digamma(0.5 * x);
    debug_assert!(!a.pole_flag && !b.pole_flag);
    SpecialValue::finite(0.5 * (a.value - b.value))
}

/// β(x) by direct summation of the grouped series, independent of the
/// digamma route.
///
/// The argument is first shifted into x ≥ 1 through
/// `β(x) = 1/x − β(x+1)`; the grouped series is then summed for 10⁴ terms
/// and closed with the integral tail
/// `∫_{K−1/2}^∞ dt/((x+2t)(x+2t+1)) = ln((x+2K)/(x+2K−1))/2`.
pub fn beta_series_direct(x: f64) -> SpecialValue {
    assert!(x.is_finite(), "beta_series_direct: argument must be finite");
    if near_nonpositive_integer(x) {
        return SpecialValue::pole();
    }
    // shift up: β(x) = Σ_{j<J} (−1)^j/(x+j) + (−1)^J β(x+J), x+J >= 1
    let mut head = 0.0;
    let mut sign = 1.0;
    let mut y = x;
    while y < 1.0 {
        head += sign / y;
        sign = -sign;
        y += 1.0;
    }
    const TERMS: usize = 10_000;
    let mut sum = 0.0;
    let mut c = 0.0; // Kahan compensation
    for k in 0..TERMS {
        let a = y + 2.0 * k as f64;
        let term = 1.0 / (a * (a + 1.0));
        let t = sum + (term - c);
        c = (t - sum) - (term - c);
        sum = t;
    }
    let edge = y + 2.0 * TERMS as f64;
    let tail = 0.5 * (edge / (edge - 1.0)).ln();
    SpecialValue::finite(head + sign * (sum + tail))
}
