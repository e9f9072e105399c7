//! Exercise the C entry points through their actual signatures, the way a
//! C caller would (hence the unsafe blocks).

use super::*;

fn ok(s: HoStatus) {
    assert_eq!(s, HoStatus::HoStatusOk, "last error: {}", last_error());
}

fn last_error() -> String {
    let ptr = ho_last_error_message();
    unsafe { std::ffi::CStr::from_ptr(ptr) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn pointwise_calls() {
    unsafe {
        let mut v = 0.0f64;
        ok(ho_pcf_value(0.0, 2.0, &mut v));
        assert!((v - (-1.0f64).exp()).abs() < 1e-13);
        ok(ho_pcf_derivative(1.0, 0.0, &mut v));
        assert!((v - 1.0).abs() < 1e-13);
        let (mut a, mut b) = (0.0f64, 0.0f64);
        ok(ho_pcf_origin(1.0, &mut a, &mut b));
        assert_eq!(a, 0.0);
        ok(ho_normalization(0.0, &mut v));
        assert!((v - 0.8932438417380023).abs() < 1e-12);
        ok(ho_cross_inner_closed(0.0, 1.0, &mut v));
        assert!((v - 1.0).abs() < 1e-12);
    }
}

#[test]
fn y_ratio_and_pole_flag() {
    unsafe {
        let mut v = 0.0f64;
        let mut pole = 0u8;
        ok(ho_y_ratio(0.0, &mut v, &mut pole));
        assert_eq!((v, pole), (0.0, 0));
        ok(ho_y_ratio(3.0, &mut v, &mut pole));
        assert_eq!(pole, 1);
    }
}

#[test]
fn error_paths_set_status_and_message() {
    unsafe {
        let mut v = 0.0f64;
        let st = ho_pcf_value(500.0, 1.0, &mut v);
        assert_eq!(st, HoStatus::HoStatusDomainError);
        assert!(last_error().contains("outside supported range"));
        assert_eq!(
            ho_pcf_value(0.0, 1.0, std::ptr::null_mut()),
            HoStatus::HoStatusNullPointer
        );
        let st = ho_cross_inner_closed(1.0, 1.0, &mut v);
        assert_eq!(st, HoStatus::HoStatusDomainError);
    }
}

#[test]
fn spectrum_handle_lifecycle() {
    unsafe {
        let mut spec: *mut HoSpectrum = std::ptr::null_mut();
        ok(ho_spectrum_from_eta(0.0, 4, 1e-10, &mut spec));
        assert_eq!(ho_spectrum_len(spec), 4);
        let mut level = HoEigenLevel {
            level_index: 0,
            nu: 0.0,
            energy: 0.0,
            c: 0.0,
        };
        ok(ho_spectrum_level(spec, 3, &mut level));
        assert_eq!(level.nu, 4.0);
        assert_eq!(level.energy, 4.5);
        let st = ho_spectrum_level(spec, 9, &mut level);
        assert_eq!(st, HoStatus::HoStatusDomainError);
        let mut eta = -1.0f64;
        let mut inf = 9u8;
        ok(ho_spectrum_eta(spec, &mut eta, &mut inf));
        assert_eq!((eta, inf), (0.0, 0));
        ho_spectrum_free(spec);

        let mut spec: *mut HoSpectrum = std::ptr::null_mut();
        ok(ho_spectrum_from_xi(0.0, 2, 1e-10, &mut spec));
        ok(ho_spectrum_level(spec, 1, &mut level));
        assert_eq!(level.nu, 1.0);
        ok(ho_spectrum_eta(spec, &mut eta, &mut inf));
        assert_eq!(inf, 1);
        ho_spectrum_free(spec);
        ho_spectrum_free(std::ptr::null_mut());
    }
}

#[test]
fn solver_and_quadrature() {
    unsafe {
        let mut nu = 0.0f64;
        ok(ho_solve_level(0.0, 3, 1e-12, &mut nu));
        assert_eq!(nu, 4.0);

        let mut rule: *mut HoQuadrature = std::ptr::null_mut();
        ok(ho_quadrature_new(30.0, 1.0, 24, &mut rule));
        let mut ip = 0.0f64;
        ok(ho_inner_product_pcf(rule, 0.0, 0.0, &mut ip));
        assert!((ip - (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-12);

        let mut spec: *mut HoSpectrum = std::ptr::null_mut();
        ok(ho_spectrum_from_eta(0.51, 4, 1e-10, &mut spec));
        let mut dev = 0.0f64;
        ok(ho_gram_max_deviation(rule, spec, 4, &mut dev));
        assert!(dev <= 1e-6, "gram deviation {dev:e}");
        ho_spectrum_free(spec);
        ho_quadrature_free(rule);

        let mut bad_rule: *mut HoQuadrature = std::ptr::null_mut();
        assert_eq!(
            ho_quadrature_new(1.0, 1.0, 24, &mut bad_rule),
            HoStatus::HoStatusDomainError
        );
        assert!(bad_rule.is_null());
    }
}

#[test]
fn weber_residual_through_ffi() {
    unsafe {
        let mut r = 0.0f64;
        ok(ho_weber_residual(0.0, 10.0, 0.01, &mut r));
        assert!(r <= 1e-5);
        assert_eq!(
            ho_weber_residual(0.0, 1.0, 0.0, &mut r),
            HoStatus::HoStatusDomainError
        );
    }
}

#[test]
fn version_and_messages_are_c_strings() {
    let v = unsafe { std::ffi::CStr::from_ptr(ho_version()) };
    assert!(!v.to_bytes().is_empty());
}
