/* Smoke test of the C interface.
 *
 * Build (from the workspace root, after `cargo build --release -p halfosc-ffi`):
 *   gcc -I crates/halfosc-ffi/include crates/halfosc-ffi/examples/smoke.c \
 *       target/release/libhalfosc_ffi.a -lm -o smoke && ./smoke
 */
#include <stdio.h>
#include <math.h>
#include "halfosc.h"

int main(void) {
    double v = 0.0;
    if (ho_pcf_value(0.0, 2.0, &v) != HO_STATUS_OK) return 1;
    if (fabs(v - exp(-1.0)) > 1e-13) return 2;

    HoSpectrum *spec = NULL;
    if (ho_spectrum_from_eta(0.51, 4, 1e-10, &spec) != HO_STATUS_OK) return 3;
    HoEigenLevel level;
    if (ho_spectrum_level(spec, 1, &level) != HO_STATUS_OK) return 4;
    if (fabs(level.nu - (-0.8661156762606741)) > 1e-9) return 5;

    HoQuadrature *rule = NULL;
    if (ho_quadrature_new(30.0, 1.0, 24, &rule) != HO_STATUS_OK) return 6;
    double dev = 0.0;
    if (ho_gram_max_deviation(rule, spec, 4, &dev) != HO_STATUS_OK) return 7;
    if (dev > 1e-6) return 8;

    double bad = 0.0;
    if (ho_pcf_value(500.0, 1.0, &bad) != HO_STATUS_DOMAIN_ERROR) return 9;
    printf("C smoke test: nu1 = %.6f, gram dev = %.2e, err = '%s'\n",
           level.nu, dev, ho_last_error_message());
    ho_quadrature_free(rule);
    ho_spectrum_free(spec);
    return 0;
}
