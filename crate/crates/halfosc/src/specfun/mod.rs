//! Real-valued special functions underlying the eigenvalue equation and the
//! normalization constants: Γ, 1/Γ, ψ, the alternating beta series
//! `β(x) = Σ (−1)^k/(x+k)`, the Kummer confluent hypergeometric series
//! ₁F₁(a;b;z), and integer-order parabolic cylinder functions.
//!
//! All functions here are pure and carry no shared state.

mod beta;
mod digamma;
mod gamma;
mod hermite;
mod kummer;

pub use beta::{beta_series, beta_series_direct};
pub use digamma::digamma;
pub use gamma::{gamma, ln_gamma, recip_gamma};
pub use hermite::{hermite_pcf, hermite_pcf_derivative};
pub use kummer::kummer;

pub(crate) use gamma::cot_pi;
#[cfg(test)]
pub(crate) use gamma::sin_pi;

/// Tolerance for snapping an argument to a nonpositive-integer pole.
/// Callers are expected to handle near-pole limits explicitly.
pub const POLE_TOL: f64 = 1e-9;

/// A special-function value together with a pole marker.
///
/// `pole_flag` is set only at the analytically known poles (Γ and ψ at
/// nonpositive integers, β at nonpositive integers), detected within
/// [`POLE_TOL`] of the pole. When `pole_flag` is false the value is finite,
/// except for overflow beyond the representable range, which is reported
/// distinctly as a signed infinity with `pole_flag == false`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValue {
    pub value: f64,
    pub pole_flag: bool,
}

impl SpecialValue {
    pub(crate) fn finite(value: f64) -> Self {
        SpecialValue {
            value,
            pole_flag: false,
        }
    }

    pub(crate) fn pole() -> Self {
        SpecialValue {
            value: f64::NAN,
            pole_flag: true,
        }
    }
}

/// True when `x` lies within [`POLE_TOL`] of a nonpositive integer.
pub(crate) fn near_nonpositive_integer(x: f64) -> bool {
    let n = x.round();
    n <= 0.0 && (x - n).abs() < POLE_TOL
}
