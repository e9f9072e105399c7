//! Kummer's confluent hypergeometric series ₁F₁(a; b; z).

use crate::error::Error;

use super::near_nonpositive_integer;

const MAX_TERMS: usize = 1000;

/// ₁F₁(a; b; z) by direct power series with compensated summation.
///
/// Terms are accumulated until two consecutive terms fall below 1e-17 of
/// the running sum. The caller is responsible for staying in the range
/// where the series converges without catastrophic cancellation (the PCF
/// evaluator switches methods at its series/asymptotic handover abscissa).
pub fn kummer(a: f64, b: f64, z: f64) -> Result<f64, Error> {
    if near_nonpositive_integer(b) {
        return Err(Error::domain(format!(
            "kummer: b = {b} is a nonpositive integer"
        )));
    }
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    let mut tiny_run = 0u32;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.abs() <= 1e-17 * sum.abs() {
            tiny_run += 1;
            if tiny_run >= 2 {
                return Ok(sum);
            }
        } else {
            tiny_run = 0;
        }
    }
    Err(Error::eval(format!(
        "kummer: series did not converge within {MAX_TERMS} terms \
         (a = {a}, b = {b}, z = {z}, last term = {term:e}, sum = {sum:e})"
    )))
}
