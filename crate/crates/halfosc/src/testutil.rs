//! Helpers shared by the unit-test modules.

pub(crate) fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let denom = want.abs().max(f64::MIN_POSITIVE);
    let rel = (got - want).abs() / denom;
    assert!(
        rel <= tol,
        "{what}: got {got:e}, want {want:e}, rel err {rel:e} > {tol:e}"
    );
}

pub(crate) fn assert_abs(got: f64, want: f64, tol: f64, what: &str) {
    let err = (got - want).abs();
    assert!(
        err <= tol,
        "{what}: got {got:e}, want {want:e}, abs err {err:e} > {tol:e}"
    );
}

/// Deterministic sampler for property suites (64-bit LCG, fixed seed).
pub(crate) struct Sampler(u64);

impl Sampler {
    pub(crate) fn new(seed: u64) -> Self {
        Sampler(seed)
    }

    pub(crate) fn next_f64(&mut self) -> f64 {
        // Knuth MMIX constants
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    pub(crate) fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
