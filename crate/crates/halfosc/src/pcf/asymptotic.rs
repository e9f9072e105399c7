//! Large-x Poincaré expansion
//! `D_ν(x) ≈ e^{-x²/4} x^ν (1 − ν(ν−1)/(2x²) + ν(ν−1)(ν−2)(ν−3)/(2·4·x⁴) − …)`,
//! truncated at the smallest term.

/// Result of summing the asymptotic series at one abscissa.
pub(crate) struct AsymEval {
    pub value: f64,
    pub derivative: f64,
    /// Smallest term magnitude reached before truncation; the expansion is
    /// usable only when this is at or below the accuracy target.
    pub smallest_term: f64,
    /// Scaled sum S with D = e^{-x²/4} x^ν S (seed for inward integration).
    pub s: f64,
    /// dS/dx.
    pub sp: f64,
}

pub(crate) fn evaluate(nu: f64, x: f64) -> AsymEval {
    let x2 = x * x;
    let mut t = 1.0f64;
    let mut s = 1.0f64;
    let mut sp = 0.0f64;
    let mut smallest = 1.0f64;
    let mut k = 0usize;
    while k < 200 {
        let kf = k as f64;
        let t_next = -t * (nu - 2.0 * kf) * (nu - 2.0 * kf - 1.0) / (2.0 * (kf + 1.0) * x2);
        // Optimal truncation: once in the divergent tail (2k >= ν the
        // numerator grows for good), stop at the first non-decreasing term.
        if 2.0 * kf >= nu && t_next.abs() >= t.abs() {
            break;
        }
        k += 1;
        t = t_next;
        s += t;
        // t_k ∝ x^{-2k}, so dt_k/dx = -2k t_k / x
        sp += -2.0 * k as f64 * t / x;
        if t.abs() < smallest {
            smallest = t.abs();
        }
        if t.abs() <= 1e-18 * s.abs() {
            break;
        }
    }
    let damp = (-0.25 * x2).exp();
    let pw = x.powf(nu);
    let value = damp * pw * s;
    let derivative = damp * pw * ((nu / x - 0.5 * x) * s + sp);
    AsymEval {
        value,
        derivative,
        smallest_term: smallest,
        s,
        sp,
    }
}
