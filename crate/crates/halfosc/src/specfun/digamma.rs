//! Digamma via upward recurrence into the asymptotic region, with
//! reflection for negative arguments.

use super::{cot_pi, near_nonpositive_integer, SpecialValue};

// B_{2k}/(2k) for k = 1..8, coefficients of the asymptotic expansion
// ψ(x) ≈ ln x − 1/(2x) − Σ B_{2k}/(2k x^{2k}).
const ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

fn digamma_positive(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    let mut z = x;
    // ψ(z) = ψ(z+1) - 1/z, shift until z >= 10
    while z < 10.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let mut result = acc + z.ln() - 0.5 / z;
    let inv2 = 1.0 / (z * z);
    let mut pw = inv2;
    for &c in &ASYMP {
        result -= c * pw;
        pw *= inv2;
    }
    result
}

/// ψ(x) = d/dx ln Γ(x).
///
/// Poles at the nonpositive integers carry
/// [`SpecialValue::pole_flag`]. Relative accuracy is better than 1e-12 on
/// (0, 40].
pub fn digamma(x: f64) -> SpecialValue {
    assert!(x.is_finite(), "digamma: argument must be finite");
    if near_nonpositive_integer(x) {
        return SpecialValue::pole();
    }
    if x < 0.0 {
        // ψ(x) = ψ(1-x) - π cot(πx)
        let v = digamma_positive(1.0 - x) - std::f64::consts::PI * cot_pi(x);
        return SpecialValue::finite(v);
    }
    SpecialValue::finite(digamma_positive(x))
}
