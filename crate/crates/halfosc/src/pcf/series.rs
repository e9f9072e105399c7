//! Power-series route for D_ν(x), valid up to the series/asymptotic
//! handover abscissa.
//!
//! `D_ν(x) = e^{-x²/4} [ A·₁F₁(-ν/2; 1/2; x²/2) − B·x·₁F₁((1-ν)/2; 3/2; x²/2) ]`
//! with `A = √π·2^{ν/2}/Γ((1-ν)/2)` and `B = √π·2^{(ν+1)/2}/Γ(-ν/2)`.
//!
//! The two branches individually grow like e^{x²/2} while their combination
//! is the recessive solution, so every digit past x ≈ 6 drowns in
//! cancellation; the evaluator keeps this route on x ≤ x_switch where at
//! most ~4 digits are lost.

use crate::error::Error;
use crate::specfun::{kummer, recip_gamma};

/// (D_ν(x), dD_ν/dx) by direct summation.
///
/// At x = 0 this reduces bit-for-bit to the expressions in
/// [`super::pcf_origin`].
pub(crate) fn value_and_derivative(nu: f64, x: f64) -> Result<(f64, f64), Error> {
    let z = 0.5 * x * x;
    let a1 = -0.5 * nu;
    let a2 = 0.5 * (1.0 - nu);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let ca = sqrt_pi * (0.5 * nu).exp2() * recip_gamma(0.5 * (1.0 - nu));
    let cb = sqrt_pi * (0.5 * (nu + 1.0)).exp2() * recip_gamma(-0.5 * nu);
    let f1 = kummer(a1, 0.5, z)?;
    let f2 = kummer(a2, 1.5, z)?;
    // d/dz ₁F₁(a;b;z) = (a/b)·₁F₁(a+1;b+1;z), dz/dx = x
    let f1p = (a1 / 0.5) * kummer(a1 + 1.0, 1.5, z)?;
    let f2p = (a2 / 1.5) * kummer(a2 + 1.0, 2.5, z)?;
    let bracket = ca * f1 - cb * x * f2;
    let dbracket = ca * f1p * x - cb * f2 - cb * x * f2p * x;
    let damp = (-0.25 * x * x).exp();
    Ok((damp * bracket, damp * (dbracket - 0.5 * x * bracket)))
}
