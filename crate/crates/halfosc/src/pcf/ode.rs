//! Inward integration of the Weber equation for the intermediate-x window.
//!
//! Integrating the scaled function `w(x) = e^{x²/4} D_ν(x)`, which satisfies
//! `w'' = x·w' − ν·w` and behaves like `x^ν` at large x, avoids the
//! exponential dynamic range of D itself. Inward integration is the stable
//! direction for the recessive solution: contamination by the dominant
//! solution decays like e^{(x²−a²)/2} as x drops below the anchor a.

/// Fixed RK4 step, well under the 0.01 ceiling the accuracy budget allows;
/// the step-halving test pins the converged regime.
pub(crate) const ODE_STEP: f64 = 1.0 / 1600.0;

/// Integrate inward from `(x0, w, w')` and report `(w, w')` at each target.
///
/// `targets` must be sorted in strictly decreasing order with every entry
/// below `x0`. Each leg lands exactly on its target by shrinking the final
/// step.
pub(crate) fn sweep_inward(
    nu: f64,
    x0: f64,
    seed: (f64, f64),
    targets: &[f64],
    step: f64,
) -> Vec<(f64, f64)> {
    let rhs = |x: f64, w: f64, wp: f64| (wp, x * wp - nu * w);
    let (mut w, mut wp) = seed;
    let mut x_cur = x0;
    let mut out = Vec::with_capacity(targets.len());
    for &xt in targets {
        debug_assert!(xt < x_cur);
        let leg = x_cur - xt;
        let n = (leg / step).ceil().max(1.0) as usize;
        let h = leg / n as f64;
        for i in 0..n {
            let x = x_cur - i as f64 * h;
            let (k1w, k1p) = rhs(x, w, wp);
            let (k2w, k2p) = rhs(x - 0.5 * h, w - 0.5 * h * k1w, wp - 0.5 * h * k1p);
            let (k3w, k3p) = rhs(x - 0.5 * h, w - 0.5 * h * k2w, wp - 0.5 * h * k2p);
            let (k4w, k4p) = rhs(x - h, w - h * k3w, wp - h * k3p);
            w -= h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
            wp -= h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        }
        x_cur = xt;
        out.push((w, wp));
    }
    out
}

/// Convert a scaled pair `(w, w')` at `x` back to `(D, D')`.
pub(crate) fn unscale(x: f64, w: f64, wp: f64) -> (f64, f64) {
    let damp = (-0.25 * x * x).exp();
    (damp * w, damp * (wp - 0.5 * x * w))
}
