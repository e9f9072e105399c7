//! C ABI for the halfosc library.
//!
//! Conventions:
//! - Every fallible call returns a [`HoStatus`]; outputs go through
//!   pointers. `HO_STATUS_OK` (0) signals success.
//! - Spectra and quadrature rules are opaque heap handles created and
//!   destroyed by matching `_new`/`_free` pairs. Handles are not
//!   thread-safe to mutate, but all operations here only read them.
//! - After a non-OK status, [`ho_last_error_message`] returns a
//!   thread-local NUL-terminated description valid until the next failing
//!   call on the same thread.
//! - Panics are caught at the boundary and reported as
//!   `HO_STATUS_INTERNAL_PANIC`.
//!
//! The matching header `include/halfosc.h` is generated by cbindgen at
//! build time.
//!
//! # Safety
//!
//! Every entry point that takes pointers is `unsafe` with the same
//! contract: output pointers must be valid for a write of the pointed-to
//! type (NULL is tolerated and reported as `HO_STATUS_NULL_POINTER`), and
//! handle pointers must be either NULL or values previously returned by
//! the matching `_new`/`_from_*` constructor that have not been freed.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use halfosc::error::Error;
use halfosc::hilbert::{
    gram_deviation, gram_matrix, inner_product, quadrature_rule, QuadratureRule,
};
use halfosc::pcf::{
    cross_inner_closed, normalization, pcf_derivative, pcf_origin, pcf_value, weber_residual,
    ScaledPcf,
};
use halfosc::spectrum::{
    solve_level, spectrum, xi_to_eta, Eta, ExtensionParameter, Spectrum,
};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoStatus {
    /// Success.
    HoStatusOk = 0,
    /// Argument outside an operation's domain.
    HoStatusDomainError = 1,
    /// Evaluation failed to reach the requested accuracy.
    HoStatusEvalError = 2,
    /// Root bracketing/refinement failed (internal inconsistency).
    HoStatusSolverError = 3,
    /// Malformed input data.
    HoStatusInvalidInput = 4,
    /// A required pointer argument was NULL.
    HoStatusNullPointer = 5,
    /// A panic was caught at the FFI boundary.
    HoStatusInternalPanic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_for(e: &Error) -> HoStatus {
    match e {
        Error::Domain(_) => HoStatus::HoStatusDomainError,
        Error::Eval(_) => HoStatus::HoStatusEvalError,
        Error::Solver(_) => HoStatus::HoStatusSolverError,
        Error::InvalidInput(_) => HoStatus::HoStatusInvalidInput,
    }
}

fn guard<F: FnOnce() -> HoStatus>(f: F) -> HoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with non-string payload".to_string());
            set_last_error(&format!("internal panic: {msg}"));
            HoStatus::HoStatusInternalPanic
        }
    }
}

fn fill<T>(out: *mut T, value: T) -> HoStatus {
    if out.is_null() {
        set_last_error("output pointer is NULL");
        return HoStatus::HoStatusNullPointer;
    }
    unsafe { ptr::write(out, value) };
    HoStatus::HoStatusOk
}

/// Thread-local message for the most recent failure on this thread.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ho_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ho_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// ------------------------------------------------------------ pointwise

/// D_ν(x).
#[no_mangle]
pub unsafe extern "C" fn ho_pcf_value(nu: f64, x: f64, out: *mut f64) -> HoStatus {
    guard(|| match pcf_value(nu, x) {
        Ok(v) => fill(out, v),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// dD_ν/dx.
#[no_mangle]
pub unsafe extern "C" fn ho_pcf_derivative(nu: f64, x: f64, out: *mut f64) -> HoStatus {
    guard(|| match pcf_derivative(nu, x) {
        Ok(v) => fill(out, v),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// D_ν(0) and D_ν'(0).
#[no_mangle]
pub unsafe extern "C" fn ho_pcf_origin(
    nu: f64,
    out_value: *mut f64,
    out_derivative: *mut f64,
) -> HoStatus {
    guard(|| {
        if !nu.is_finite() {
            set_last_error("nu must be finite");
            return HoStatus::HoStatusDomainError;
        }
        let (v, d) = pcf_origin(nu);
        let s = fill(out_value, v);
        if s != HoStatus::HoStatusOk {
            return s;
        }
        fill(out_derivative, d)
    })
}

/// Normalization constant c(ν) with c·D_ν of unit L² norm.
#[no_mangle]
pub unsafe extern "C" fn ho_normalization(nu: f64, out_c: *mut f64) -> HoStatus {
    guard(|| match normalization(nu) {
        Ok(n) => fill(out_c, n.c),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// Closed-form ∫₀^∞ D_ν D_μ dx for ν ≠ μ.
#[no_mangle]
pub unsafe extern "C" fn ho_cross_inner_closed(nu: f64, mu: f64, out: *mut f64) -> HoStatus {
    guard(|| match cross_inner_closed(nu, mu) {
        Ok(v) => fill(out, v),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// Eigenvalue function y(ν) = Γ((1−ν)/2)/Γ(−ν/2). `out_is_pole` is set to
/// 1 at the odd-integer asymptotes (where the value output is NaN).
#[no_mangle]
pub unsafe extern "C" fn ho_y_ratio(nu: f64, out_value: *mut f64, out_is_pole: *mut u8) -> HoStatus {
    guard(|| {
        if !nu.is_finite() {
            set_last_error("nu must be finite");
            return HoStatus::HoStatusDomainError;
        }
        let y = halfosc::spectrum::y_ratio(nu);
        let s = fill(out_value, y.value);
        if s != HoStatus::HoStatusOk {
            return s;
        }
        fill(out_is_pole, u8::from(y.pole_flag))
    })
}

/// Max Weber-equation residual of D_ν on a uniform grid (0, x_end] with
/// the given spacing.
#[no_mangle]
pub unsafe extern "C" fn ho_weber_residual(nu: f64, x_end: f64, h: f64, out: *mut f64) -> HoStatus {
    guard(|| {
        if h.is_nan() || x_end.is_nan() || h <= 0.0 || x_end <= h {
            set_last_error("require 0 < h < x_end");
            return HoStatus::HoStatusDomainError;
        }
        let n = (x_end / h).round() as usize;
        let grid: Vec<f64> = (1..=n).map(|i| i as f64 * h).collect();
        match weber_residual(nu, &grid) {
            Ok(v) => fill(out, v),
            Err(e) => {
                set_last_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

// -------------------------------------------------------------- spectrum

/// One spectrum level in C layout.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HoEigenLevel {
    pub level_index: u32,
    pub nu: f64,
    pub energy: f64,
    pub c: f64,
}

/// Opaque spectrum handle.
pub struct HoSpectrum(Spectrum);

/// Unique eigen-order in level interval M for finite η.
#[no_mangle]
pub unsafe extern "C" fn ho_solve_level(eta: f64, m: u32, tol: f64, out_nu: *mut f64) -> HoStatus {
    guard(|| match solve_level(eta, m, tol) {
        Ok(v) => fill(out_nu, v),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

fn spectrum_new(param: ExtensionParameter, m_max: u32, tol: f64, out: *mut *mut HoSpectrum) -> HoStatus {
    match spectrum(&param, m_max, tol) {
        Ok(s) => {
            if out.is_null() {
                set_last_error("output pointer is NULL");
                return HoStatus::HoStatusNullPointer;
            }
            let boxed = Box::new(HoSpectrum(s));
            unsafe { ptr::write(out, Box::into_raw(boxed)) };
            HoStatus::HoStatusOk
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    }
}

/// Spectrum of the extension with finite η, levels 1..m_max.
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_from_eta(
    eta: f64,
    m_max: u32,
    tol: f64,
    out: *mut *mut HoSpectrum,
) -> HoStatus {
    guard(|| match ExtensionParameter::from_eta(eta) {
        Ok(p) => spectrum_new(p, m_max, tol, out),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// Spectrum of the extension with boundary angle ξ ∈ [0, π).
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_from_xi(
    xi: f64,
    m_max: u32,
    tol: f64,
    out: *mut *mut HoSpectrum,
) -> HoStatus {
    guard(|| match xi_to_eta(xi) {
        Ok(p) => spectrum_new(p, m_max, tol, out),
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// Number of levels held by the handle.
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_len(spec: *const HoSpectrum) -> usize {
    if spec.is_null() {
        return 0;
    }
    unsafe { &*spec }.0.levels().len()
}

/// Level m (1-based).
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_level(
    spec: *const HoSpectrum,
    m: u32,
    out: *mut HoEigenLevel,
) -> HoStatus {
    guard(|| {
        if spec.is_null() {
            set_last_error("spectrum handle is NULL");
            return HoStatus::HoStatusNullPointer;
        }
        let s = unsafe { &*spec };
        match s.0.level(m) {
            Some(l) => fill(
                out,
                HoEigenLevel {
                    level_index: l.level_index,
                    nu: l.nu,
                    energy: l.energy,
                    c: l.c,
                },
            ),
            None => {
                set_last_error("level index out of range");
                HoStatus::HoStatusDomainError
            }
        }
    })
}

/// Eigenvalue η used by the handle. Returns 1 through `out_is_infinite`
/// for the ξ = 0 extension (η = ∞), in which case `out_eta` is untouched.
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_eta(
    spec: *const HoSpectrum,
    out_eta: *mut f64,
    out_is_infinite: *mut u8,
) -> HoStatus {
    guard(|| {
        if spec.is_null() {
            set_last_error("spectrum handle is NULL");
            return HoStatus::HoStatusNullPointer;
        }
        let s = unsafe { &*spec };
        match s.0.parameter().eta {
            Eta::Finite(e) => {
                let st = fill(out_eta, e);
                if st != HoStatus::HoStatusOk {
                    return st;
                }
                fill(out_is_infinite, 0)
            }
            Eta::Infinite => fill(out_is_infinite, 1),
        }
    })
}

/// Destroy a spectrum handle. NULL is accepted.
#[no_mangle]
pub unsafe extern "C" fn ho_spectrum_free(spec: *mut HoSpectrum) {
    if !spec.is_null() {
        drop(unsafe { Box::from_raw(spec) });
    }
}

// ------------------------------------------------------------ quadrature

/// Opaque composite quadrature handle.
pub struct HoQuadrature(QuadratureRule);

/// Composite Gauss-Legendre rule on [0, x_max].
#[no_mangle]
pub unsafe extern "C" fn ho_quadrature_new(
    x_max: f64,
    panel_width: f64,
    nodes_per_panel: u32,
    out: *mut *mut HoQuadrature,
) -> HoStatus {
    guard(|| match quadrature_rule(x_max, panel_width, nodes_per_panel) {
        Ok(r) => {
            if out.is_null() {
                set_last_error("output pointer is NULL");
                return HoStatus::HoStatusNullPointer;
            }
            unsafe { ptr::write(out, Box::into_raw(Box::new(HoQuadrature(r)))) };
            HoStatus::HoStatusOk
        }
        Err(e) => {
            set_last_error(&e.to_string());
            status_for(&e)
        }
    })
}

/// Destroy a quadrature handle. NULL is accepted.
#[no_mangle]
pub unsafe extern "C" fn ho_quadrature_free(rule: *mut HoQuadrature) {
    if !rule.is_null() {
        drop(unsafe { Box::from_raw(rule) });
    }
}

/// Quadrature ⟨D_ν, D_μ⟩ over [0, x_max].
#[no_mangle]
pub unsafe extern "C" fn ho_inner_product_pcf(
    rule: *const HoQuadrature,
    nu: f64,
    mu: f64,
    out: *mut f64,
) -> HoStatus {
    guard(|| {
        if rule.is_null() {
            set_last_error("quadrature handle is NULL");
            return HoStatus::HoStatusNullPointer;
        }
        let r = unsafe { &*rule };
        let run = || -> Result<f64, Error> {
            let f = ScaledPcf::new(1.0, nu)?;
            let g = ScaledPcf::new(1.0, mu)?;
            inner_product(&f, &g, &r.0)
        };
        match run() {
            Ok(v) => fill(out, v),
            Err(e) => {
                set_last_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// Max |G − I| over the n×n Gram matrix of a spectrum's first n
/// normalized eigenfunctions.
#[no_mangle]
pub unsafe extern "C" fn ho_gram_max_deviation(
    rule: *const HoQuadrature,
    spec: *const HoSpectrum,
    n: usize,
    out: *mut f64,
) -> HoStatus {
    guard(|| {
        if rule.is_null() || spec.is_null() {
            set_last_error("handle is NULL");
            return HoStatus::HoStatusNullPointer;
        }
        let r = unsafe { &*rule };
        let s = unsafe { &*spec };
        match gram_matrix(&s.0, n, &r.0) {
            Ok(g) => fill(out, gram_deviation(&g)),
            Err(e) => {
                set_last_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

#[cfg(test)]
mod tests;
