//! Spectra and orthonormal eigenbases of the half-line harmonic oscillator
//! `-d²/dx² + x²/4` on `L²(0, ∞)` under the Robin boundary condition
//! `f(0)·cos ξ − f'(0)·sin ξ = 0`, for every boundary angle `ξ ∈ [0, π)`.
//!
//! For each `ξ` the operator has a pure point spectrum `{ν + 1/2}` whose
//! eigen-orders `ν` solve the transcendental equation
//! `y(ν) = Γ((1−ν)/2) / Γ(−ν/2) = η`, with `η = cot(ξ)/√2`, one root per
//! interval between consecutive odd asymptotes of `y`. The eigenfunctions
//! are normalized parabolic cylinder functions `c(ν)·D_ν(x)`.
//!
//! Module layout:
//! - [`specfun`]: Gamma, reciprocal Gamma, digamma, the alternating beta
//!   series, the Kummer series ₁F₁, and integer-order parabolic cylinder
//!   functions.
//! - [`pcf`]: evaluation of `D_ν(x)` and its derivative over the half-line,
//!   origin values, L² normalization constants, the closed-form cross inner
//!   product, and Weber-equation residuals.
//! - [`spectrum`]: the eigenvalue equation `y(ν) = η`, level intervals,
//!   bracketed root solving, spectrum assembly, and the golden reference
//!   table of eigen-orders.
//! - [`hilbert`]: composite Gauss-Legendre quadrature on `[0, x_max]`,
//!   inner products, Gram matrices, boundary residuals, basis
//!   projection/reconstruction, and the mirrored full-line basis.
//! - [`cli`]: the command-line surface (used by the `halfosc` binary).

// Frozen reference values are kept verbatim from their 40-digit source
// computations; trimming them to shortest-roundtrip form would obscure
// where they came from.
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod hilbert;
pub mod pcf;
pub mod specfun;
pub mod spectrum;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
