/* C interface for the halfosc library: spectra and eigenbases of the half-line harmonic oscillator. */

#ifndef HALFOSC_H
#define HALFOSC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum HoStatus {
  // Success.
  HO_STATUS_OK = 0,
  // Argument outside an operation's domain.
  HO_STATUS_DOMAIN_ERROR = 1,
  // Evaluation failed to reach the requested accuracy.
  HO_STATUS_EVAL_ERROR = 2,
  // Root bracketing/refinement failed (internal inconsistency).
  HO_STATUS_SOLVER_ERROR = 3,
  // Malformed input data.
  HO_STATUS_INVALID_INPUT = 4,
  // A required pointer argument was NULL.
  HO_STATUS_NULL_POINTER = 5,
  // A panic was caught at the FFI boundary.
  HO_STATUS_INTERNAL_PANIC = 6,
} HoStatus;

// Opaque composite quadrature handle.
typedef struct HoQuadrature HoQuadrature;

// Opaque spectrum handle.
typedef struct HoSpectrum HoSpectrum;

// One spectrum level in C layout.
typedef struct HoEigenLevel {
  uint32_t level_index;
  double nu;
  double energy;
  double c;
} HoEigenLevel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Thread-local message for the most recent failure on this thread.
// Valid until the next failing call on the same thread.
const char *ho_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *ho_version(void);

// D_ν(x).
enum HoStatus ho_pcf_value(double nu, double x, double *out);

// dD_ν/dx.
enum HoStatus ho_pcf_derivative(double nu, double x, double *out);

// D_ν(0) and D_ν'(0).
enum HoStatus ho_pcf_origin(double nu, double *out_value, double *out_derivative);

// Normalization constant c(ν) with c·D_ν of unit L² norm.
enum HoStatus ho_normalization(double nu, double *out_c);

// Closed-form ∫₀^∞ D_ν D_μ dx for ν ≠ μ.
enum HoStatus ho_cross_inner_closed(double nu, double mu, double *out);

// Eigenvalue function y(ν) = Γ((1−ν)/2)/Γ(−ν/2). `out_is_pole` is set to
// 1 at the odd-integer asymptotes (where the value output is NaN).
enum HoStatus ho_y_ratio(double nu, double *out_value, uint8_t *out_is_pole);

// Max Weber-equation residual of D_ν on a uniform grid (0, x_end] with
// the given spacing.
enum HoStatus ho_weber_residual(double nu, double x_end, double h, double *out);

// Unique eigen-order in level interval M for finite η.
enum HoStatus ho_solve_level(double eta, uint32_t m, double tol, double *out_nu);

// Spectrum of the extension with finite η, levels 1..m_max.
enum HoStatus ho_spectrum_from_eta(double eta, uint32_t m_max, double tol, struct HoSpectrum **out);

// Spectrum of the extension with boundary angle ξ ∈ [0, π).
enum HoStatus ho_spectrum_from_xi(double xi, uint32_t m_max, double tol, struct HoSpectrum **out);

// Number of levels held by the handle.
size_t ho_spectrum_len(const struct HoSpectrum *spec);

// Level m (1-based).
enum HoStatus ho_spectrum_level(const struct HoSpectrum *spec,
                                uint32_t m,
                                struct HoEigenLevel *out);

// Eigenvalue η used by the handle. Returns 1 through `out_is_infinite`
// for the ξ = 0 extension (η = ∞), in which case `out_eta` is untouched.
enum HoStatus ho_spectrum_eta(const struct HoSpectrum *spec,
                              double *out_eta,
                              uint8_t *out_is_infinite);

// Destroy a spectrum handle. NULL is accepted.
void ho_spectrum_free(struct HoSpectrum *spec);

// Composite Gauss-Legendre rule on [0, x_max].
enum HoStatus ho_quadrature_new(double x_max,
                                double panel_width,
                                uint32_t nodes_per_panel,
                                struct HoQuadrature **out);

// Destroy a quadrature handle. NULL is accepted.
void ho_quadrature_free(struct HoQuadrature *rule);

// Quadrature ⟨D_ν, D_μ⟩ over [0, x_max].
enum HoStatus ho_inner_product_pcf(const struct HoQuadrature *rule,
                                   double nu,
                                   double mu,
                                   double *out);

// Max |G − I| over the n×n Gram matrix of a spectrum's first n
// normalized eigenfunctions.
enum HoStatus ho_gram_max_deviation(const struct HoQuadrature *rule,
                                    const struct HoSpectrum *spec,
                                    size_t n,
                                    double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HALFOSC_H */
