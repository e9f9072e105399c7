//! Integer-order parabolic cylinder functions
//! `D_n(x) = 2^{-n/2} e^{-x²/4} H_n(x/√2)`.
//!
//! Computed by upward recurrence directly on the D values,
//! `D_{k+1} = x·D_k − k·D_{k−1}`, which is the Hermite recurrence in the
//! scaled variable and keeps every intermediate on the scale of the final
//! result (the raw polynomial `H_n(x/√2)` overflows for large n·x even
//! when `D_n(x)` itself is representable).

/// D_n(x) for integer order n ≥ 0.
pub fn hermite_pcf(n: u32, x: f64) -> f64 {
    hermite_pcf_pair(n, x).0
}

/// dD_n/dx for integer order n ≥ 0, through
/// `D_n'(x) = n·D_{n−1}(x) − (x/2)·D_n(x)`.
pub fn hermite_pcf_derivative(n: u32, x: f64) -> f64 {
    let (dn, dnm1) = hermite_pcf_pair(n, x);
    n as f64 * dnm1 - 0.5 * x * dn
}

/// Returns (D_n(x), D_{n-1}(x)); the second component is 0 for n = 0.
pub(crate) fn hermite_pcf_pair(n: u32, x: f64) -> (f64, f64) {
    let d0 = (-0.25 * x * x).exp();
    if n == 0 {
        return (d0, 0.0);
    }
    let mut prev = d0;
    let mut cur = x * d0;
    for k in 1..n {
        let next = x * cur - k as f64 * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}
