//! The eigenvalue equation and spectrum assembly.
//!
//! An order ν belongs to the spectrum of the extension with parameter η
//! exactly when `y(ν) = Γ((1−ν)/2) / Γ(−ν/2) = η`. The function y has
//! vertical asymptotes at the odd positive integers, zeros exactly at the
//! even nonnegative integers, and decreases continuously from +∞ to −∞ on
//! each interval between consecutive asymptotes (and on (−∞, 1)), so every
//! interval carries exactly one root for every real η.

use crate::error::Error;
use crate::pcf::{self, ScaledPcf};
use crate::specfun::{gamma, ln_gamma, recip_gamma, SpecialValue};

/// Eigenvalue-equation parameter `η = cot(ξ)/√2`, infinite exactly at ξ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eta {
    Finite(f64),
    Infinite,
}

impl Eta {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Eta::Infinite)
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Eta::Finite(v) => Some(*v),
            Eta::Infinite => None,
        }
    }
}

/// Boundary-condition angle ξ ∈ [0, π) together with the derived η.
///
/// Sign convention: the boundary condition `f(0)cos ξ − f'(0)sin ξ = 0`
/// combined with the standard origin data of D_ν pins the Γ-ratio to −η
/// when η is read as `cot(ξ)/√2`; the reference eigenvalue table is
/// consistent with the level sets `y(ν) = η` as adopted here. η is the
/// canonical solver parameter throughout, and boundary residuals are
/// checked in magnitudes so both conventions agree (see
/// [`crate::hilbert::boundary_residual`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionParameter {
    pub xi: f64,
    pub eta: Eta,
}

/// Parameter from the boundary angle. ξ = 0 maps to infinite η; ξ = π/2
/// maps to η = 0 exactly.
pub fn xi_to_eta(xi: f64) -> Result<ExtensionParameter, Error> {
    if !xi.is_finite() || !(0.0..std::f64::consts::PI).contains(&xi) {
        return Err(Error::domain(format!("xi = {xi} outside [0, π)")));
    }
    if xi == 0.0 {
        return Ok(ExtensionParameter {
            xi,
            eta: Eta::Infinite,
        });
    }
    if xi == std::f64::consts::FRAC_PI_2 {
        return Ok(ExtensionParameter {
            xi,
            eta: Eta::Finite(0.0),
        });
    }
    let eta = xi.cos() / (xi.sin() * std::f64::consts::SQRT_2);
    Ok(ExtensionParameter {
        xi,
        eta: Eta::Finite(eta),
    })
}

impl ExtensionParameter {
    /// Parameter from a finite η; the angle is recovered as
    /// `ξ = atan2(1, √2·η) ∈ (0, π)`.
    pub fn from_eta(eta: f64) -> Result<Self, Error> {
        if !eta.is_finite() {
            return Err(Error::domain(format!("eta = {eta} must be finite")));
        }
        let xi = if eta == 0.0 {
            std::f64::consts::FRAC_PI_2
        } else {
            1.0f64.atan2(std::f64::consts::SQRT_2 * eta)
        };
        Ok(ExtensionParameter {
            xi,
            eta: Eta::Finite(eta),
        })
    }
}

/// `y(ν) = Γ((1−ν)/2) / Γ(−ν/2)`, assembled as Γ·(1/Γ) so the zeros at
/// even nonnegative ν are exact. Poles (asymptotes) at the odd positive
/// integers are flagged.
pub fn y_ratio(nu: f64) -> SpecialValue {
    assert!(nu.is_finite(), "y_ratio: order must be finite");
    let a = 0.5 * (1.0 - nu); // Γ argument
    let b = -0.5 * nu; // reciprocal-Γ argument
    let an = a.round();
    if an <= 0.0 && (a - an).abs() < crate::specfun::POLE_TOL {
        return SpecialValue {
            value: f64::NAN,
            pole_flag: true,
        };
    }
    if nu < -280.0 {
        // both Γ arguments are large positive; the ratio is modest but the
        // factors overflow, so work in log space
        return SpecialValue {
            value: (ln_gamma(a) - ln_gamma(b)).exp(),
            pole_flag: false,
        };
    }
    SpecialValue {
        value: gamma(a).value * recip_gamma(b),
        pole_flag: false,
    }
}

/// Open interval I_M between consecutive asymptotes of y: I₁ = (−∞, 1) and
/// I_M = (2M−3, 2M−1) for M ≥ 2. Each contains exactly one eigen-order for
/// every finite η.
pub fn level_interval(m: u32) -> (f64, f64) {
    assert!(m >= 1, "level index must be positive");
    if m == 1 {
        (f64::NEG_INFINITY, 1.0)
    } else {
        (2.0 * m as f64 - 3.0, 2.0 * m as f64 - 1.0)
    }
}

// Bracket inset from each asymptote. The pole guard in y_ratio flags
// orders within 2·POLE_TOL of an odd integer (the Γ argument moves at half
// the rate of ν), so the inset must stay outside that band.
const BRACKET_EPS: f64 = 4e-9;
const EXPANSION_CAP: f64 = -1e6;

/// The unique ν ∈ I_M with y(ν) = η, by bracketed bisection plus one
/// secant polish. The returned root satisfies
/// `|y(ν) − η| ≤ tol·(1 + |η|)` and the final bracket width is at most
/// 1e-12 (or a few ulps for very large |ν|).
pub fn solve_level(eta: f64, m: u32, tol: f64) -> Result<f64, Error> {
    if !eta.is_finite() {
        return Err(Error::domain(format!("solve_level: eta = {eta}")));
    }
    if tol.is_nan() || tol < 1e-12 {
        return Err(Error::domain(format!(
            "solve_level: tol = {tol:e} below 1e-12"
        )));
    }
    if m == 0 {
        return Err(Error::domain("solve_level: level index must be >= 1".to_string()));
    }
    let (ilo, ihi) = level_interval(m);
    let y_at = |nu: f64| -> f64 { y_ratio(nu).value };

    let mut hi = ihi - BRACKET_EPS;
    let mut f_hi = y_at(hi) - eta;
    // the right end sits against an asymptote falling to −∞ (or, for I₁,
    // the asymptote at 1), so f_hi < 0 for any desk-scale η; shrink the
    // inset if an extreme η still beats it
    let mut shrink = BRACKET_EPS;
    while f_hi > 0.0 && shrink > 1e-15 {
        shrink *= 1e-2;
        hi = ihi - shrink;
        f_hi = y_at(hi) - eta;
    }
    if f_hi > 0.0 {
        return Err(Error::solver(format!(
            "solve_level: no sign change at the right end of I_{m} for eta = {eta}"
        )));
    }

    let mut lo;
    let mut f_lo;
    if m == 1 {
        // expand leftward from 1−ε by doubling the distance to 1
        lo = 1.0 - BRACKET_EPS;
        f_lo = y_at(lo) - eta;
        while f_lo < 0.0 {
            lo = 2.0 * lo - 1.0;
            if lo < EXPANSION_CAP {
                return Err(Error::solver(format!(
                    "solve_level: bracket expansion hit {EXPANSION_CAP} for eta = {eta}"
                )));
            }
            f_lo = y_at(lo) - eta;
        }
    } else {
        lo = ilo + BRACKET_EPS;
        f_lo = y_at(lo) - eta;
        let mut shrink = BRACKET_EPS;
        while f_lo < 0.0 && shrink > 1e-15 {
            shrink *= 1e-2;
            lo = ilo + shrink;
            f_lo = y_at(lo) - eta;
        }
        if f_lo < 0.0 {
            return Err(Error::solver(format!(
                "solve_level: no sign change at the left end of I_{m} for eta = {eta}"
            )));
        }
    }

    // bisection; y is strictly decreasing on the interval, so the invariant
    // f(lo) >= 0 >= f(hi) is maintained exactly
    let width_target = |lo: f64, hi: f64| {
        let scale = lo.abs().max(hi.abs());
        (1e-12f64).max(4.0 * scale * f64::EPSILON)
    };
    let mut iterations = 0;
    while hi - lo > width_target(lo, hi) && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = y_at(mid) - eta;
        if f_mid >= 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        iterations += 1;
    }
    let mut root = 0.5 * (lo + hi);
    let mut f_root = y_at(root) - eta;

    // one secant polish inside the final bracket
    if f_lo != f_hi {
        let sec = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if sec > lo && sec < hi {
            let f_sec = y_at(sec) - eta;
            if f_sec.abs() < f_root.abs() {
                root = sec;
                f_root = f_sec;
            }
        }
    }
    // snap to an exact integer root (the η = 0 zeros of y are exact)
    let snapped = root.round();
    if (root - snapped).abs() < BRACKET_EPS {
        let ys = y_ratio(snapped);
        if !ys.pole_flag && ys.value == eta {
            root = snapped;
            f_root = 0.0;
        }
    }

    if f_root.abs() > tol * (1.0 + eta.abs()) {
        return Err(Error::solver(format!(
            "solve_level: residual {:e} above tol·(1+|eta|) at nu = {root} (eta = {eta}, M = {m})",
            f_root.abs()
        )));
    }
    Ok(root)
}

/// One eigenvalue level: index M, eigen-order ν, energy ν + 1/2, and the
/// L² normalization constant of its eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenLevel {
    pub level_index: u32,
    pub nu: f64,
    pub energy: f64,
    pub c: f64,
}

/// Ordered point spectrum of one extension.
#[derive(Debug, Clone)]
pub struct Spectrum {
    parameter: ExtensionParameter,
    levels: Vec<EigenLevel>,
}

impl Spectrum {
    pub fn parameter(&self) -> &ExtensionParameter {
        &self.parameter
    }

    pub fn levels(&self) -> &[EigenLevel] {
        &self.levels
    }

    pub fn level(&self, m: u32) -> Option<&EigenLevel> {
        self.levels.get(m as usize - 1)
    }

    /// Evaluation handle for the normalized eigenfunction `c·D_ν` of level
    /// M (1-based).
    pub fn eigenfunction(&self, m: u32) -> Result<ScaledPcf, Error> {
        let level = self
            .level(m)
            .ok_or_else(|| Error::domain(format!("level M = {m} beyond computed spectrum")))?;
        ScaledPcf::new(level.c, level.nu)
    }
}

/// Maximum level count; beyond this the eigen-orders leave the range where
/// normalization constants stay representable.
pub const M_MAX_LIMIT: u32 = 60;

/// Levels M = 1..m_max of the extension `param`.
///
/// The two closed-form cases short-circuit to exact integer sequences:
/// infinite η (ξ = 0) gives ν = 2M−1 and η = 0 (ξ = π/2) gives ν = 2M−2.
pub fn spectrum(param: &ExtensionParameter, m_max: u32, tol: f64) -> Result<Spectrum, Error> {
    if m_max == 0 || m_max > M_MAX_LIMIT {
        return Err(Error::domain(format!(
            "spectrum: m_max = {m_max} outside 1..={M_MAX_LIMIT}"
        )));
    }
    let mut levels = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let nu = match param.eta {
            Eta::Infinite => 2.0 * m as f64 - 1.0,
            Eta::Finite(e) => {
                if e == 0.0 {
                    2.0 * m as f64 - 2.0
                } else {
                    solve_level(e, m, tol)?
                }
            }
        };
        let c = pcf::normalization(nu)?.c;
        levels.push(EigenLevel {
            level_index: m,
            nu,
            energy: nu + 0.5,
            c,
        });
    }
    debug_assert!(levels.windows(2).all(|w| w[0].nu < w[1].nu));
    Ok(Spectrum {
        parameter: *param,
        levels,
    })
}

// ------------------------------------------------------------------------
// Golden reference table of the first 11 eigen-orders for seven parameter
// values.
// ------------------------------------------------------------------------

/// Number of parameter columns and levels in the golden table.
pub const TABLE1_COLS: usize = 7;
pub const TABLE1_ROWS: usize = 11;

/// Printed column headings of the reference table (η rounded to 3
/// significant digits).
pub const TABLE1_LABELS: [&str; TABLE1_COLS] =
    ["-2.18", "-0.51", "0", "0.23", "0.51", "0.97", "2.18"];

/// The boundary angles behind the golden columns are ξ = kπ/10 for
/// k = 9, 7, 5, 4, 3, 2, 1; the printed headings are their η values
/// rounded. Solving with the rounded headings shifts most entries by more
/// than their print precision, so the exact angles are used.
pub const TABLE1_XI_NUMERATORS: [u32; TABLE1_COLS] = [9, 7, 5, 4, 3, 2, 1];

/// Exact η for golden column `col`.
pub fn table1_eta(col: usize) -> f64 {
    let k = TABLE1_XI_NUMERATORS[col];
    if k == 5 {
        return 0.0;
    }
    let xi = k as f64 * std::f64::consts::PI / 10.0;
    xi.cos() / (xi.sin() * std::f64::consts::SQRT_2)
}

/// Golden eigen-orders exactly as printed in the reference table,
/// `TABLE1_GOLDEN[col][m-1]`.
pub const TABLE1_GOLDEN: [[f64; TABLE1_ROWS]; TABLE1_COLS] = [
    [
        0.77051, 2.66471, 4.59639, 6.54652, 8.50776, 10.4764, 12.4503, 14.4281, 16.409, 18.3922,
        20.3773,
    ],
    [
        0.399912, 2.26065, 4.20523, 6.1743, 8.15402, 10.1394, 12.1283, 14.1195, 16.1123, 18.1062,
        20.101,
    ],
    [0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0],
    [
        -0.311391, 1.86885, 3.90249, 5.91892, 7.92911, 9.93622, 11.9415, 13.9457, 15.9491,
        17.9519, 19.9543,
    ],
    [
        -0.875066, 1.71369, 3.78578, 5.82117, 7.84326, 9.85874, 11.8704, 13.8795, 15.887, 17.8932,
        19.8985,
    ],
    [
        -2.33401, 1.5141, 3.62177, 5.67849, 7.715227, 9.74156, 11.7617, 13.7777, 15.7908, 17.8019,
        19.8113,
    ],
    [
        -9.95, 1.26337, 3.36297, 5.42659, 7.47292, 9.50897, 11.5382, 13.5626, 15.5834, 17.6014,
        19.6172,
    ],
];

/// Absolute comparison tolerance for golden cell `(col, m)`.
///
/// 5e-4 in general (half a unit of the shortest prints), exact-integer
/// precision for the η = 0 column, and 5e-3 for the low-precision first
/// entry of the last column. That entry is printed truncated in the
/// reference (−9.95 against the converged −9.95900…), so it is expected to
/// miss even its widened tolerance; the comparison reports it honestly.
pub fn table1_cell_tolerance(col: usize, m: usize) -> f64 {
    if col == 2 {
        1e-12
    } else if col == 6 && m == 1 {
        5e-3
    } else {
        5e-4
    }
}

/// The full computed grid, `grid[col][m-1] = solve_level(η_col, m)`.
pub fn table1_grid(tol: f64) -> Result<[[f64; TABLE1_ROWS]; TABLE1_COLS], Error> {
    let mut grid = [[0.0; TABLE1_ROWS]; TABLE1_COLS];
    for (col, row) in grid.iter_mut().enumerate() {
        let eta = table1_eta(col);
        for (i, cell) in row.iter_mut().enumerate() {
            *cell = solve_level(eta, i as u32 + 1, tol)?;
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{assert_abs, assert_rel, Sampler};

    #[test]
    fn xi_to_eta_special_angles() {
        let p = xi_to_eta(std::f64::consts::FRAC_PI_2).unwrap();
        assert_eq!(p.eta, Eta::Finite(0.0));
        let p = xi_to_eta(0.0).unwrap();
        assert!(p.eta.is_infinite());
        let p = xi_to_eta(std::f64::consts::FRAC_PI_4).unwrap();
        assert_rel(
            p.eta.finite().unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            1e-14,
            "η(π/4)",
        );
        assert!(xi_to_eta(std::f64::consts::PI).is_err());
        assert!(xi_to_eta(-0.1).is_err());
    }

    #[test]
    fn from_eta_round_trip() {
        for &eta in &[-2.18, -0.51, 0.0, 0.23, 2.18, 100.0] {
            let p = ExtensionParameter::from_eta(eta).unwrap();
            assert!((0.0..std::f64::consts::PI).contains(&p.xi));
            let back = xi_to_eta(p.xi).unwrap();
            assert_abs(
                back.eta.finite().unwrap(),
                eta,
                1e-12 * (1.0 + eta.abs()),
                "ξ↦η round trip",
            );
        }
    }

    #[test]
    fn y_ratio_zeros_poles_and_values() {
        for n in 0..=10 {
            assert_eq!(y_ratio(2.0 * n as f64).value, 0.0, "y(2n) exact zero");
        }
        for n in 0..=5 {
            assert!(y_ratio(2.0 * n as f64 + 1.0).pole_flag, "asymptote at 2n+1");
        }
        // y(-2) = Γ(3/2)/Γ(1) = √π/2
        assert_rel(
            y_ratio(-2.0).value,
            0.5 * std::f64::consts::PI.sqrt(),
            1e-13,
            "y(-2)",
        );
        // 40-digit references
        assert_rel(y_ratio(0.77051).value, -2.17998896507938588, 1e-12, "y(0.77051)");
        assert_rel(y_ratio(-9.959002).value, 2.1762508734681531, 1e-12, "y(-9.959002)");
        // nonzero away from the even integers
        let mut s = Sampler::new(5);
        for _ in 0..50 {
            let nu = s.in_range(-9.9, 9.9);
            if (nu - nu.round()).abs() < 1e-3 {
                continue;
            }
            assert!(y_ratio(nu).value.abs() > 0.0);
        }
    }

    #[test]
    fn y_ratio_asymptote_limits_and_left_growth() {
        for &a in &[1.0, 3.0, 5.0, 7.0] {
            assert!(y_ratio(a + 1e-6).value > 1e5, "y({a}+) → +∞");
            assert!(y_ratio(a - 1e-6).value < -1e5, "y({a}−) → −∞");
        }
        let y50 = y_ratio(-50.0).value;
        let y10 = y_ratio(-10.0).value;
        assert!(y50 > y10 && y10 > 0.0, "growth toward −∞: y(-50) = {y50}, y(-10) = {y10}");
        // ordering holds across the log-space threshold at ν = -280
        let a = y_ratio(-300.0).value;
        let b = y_ratio(-279.9).value;
        assert!(a > b && b > y10, "monotone across the log-space threshold");
        // and the two branches agree where both are representable
        let direct = gamma(0.5 * (1.0 + 279.5)).value * recip_gamma(0.5 * 279.5);
        assert_rel(y_ratio(-279.5).value, direct, 1e-12, "direct branch at -279.5");
    }

    #[test]
    fn y_ratio_closed_form_at_even_negative_orders() {
        // y(−2n) = Γ(n+1/2)/Γ(n) = √π (2n−1)!! / (2ⁿ (n−1)!)
        for n in 1..=6u32 {
            let double_fact: f64 = (1..=n).map(|k| 2.0 * k as f64 - 1.0).product();
            let fact: f64 = (1..n).map(|k| k as f64).product::<f64>().max(1.0);
            let want = std::f64::consts::PI.sqrt() * double_fact / ((n as f64).exp2() * fact);
            assert_rel(y_ratio(-2.0 * n as f64).value, want, 1e-13, &format!("y(-{})", 2 * n));
        }
    }

    #[test]
    fn y_ratio_derivative_closed_form() {
        // y'(ν) = −y(ν)·β(−ν) = −√π·2^{ν+1}·Γ(−ν)·β(−ν)/Γ(−ν/2)² by the
        // duplication formula, checked against central finite differences;
        // this ties Γ, β, and y together (and pins the 2^{ν+1} factor,
        // which is easy to get wrong)
        use crate::specfun::beta_series;
        let mut s = Sampler::new(131);
        let mut checked = 0;
        while checked < 40 {
            let nu = s.in_range(-8.0, 8.0);
            // keep clear of asymptotes, zeros of Γ(−ν/2)⁻², and β poles
            if (nu - nu.round()).abs() < 0.05 {
                continue;
            }
            let h = 1e-6;
            let fd = (y_ratio(nu + h).value - y_ratio(nu - h).value) / (2.0 * h);
            let g = gamma(-nu).value;
            let b = beta_series(-nu).value;
            let rg = recip_gamma(-0.5 * nu);
            let closed = -(nu + 1.0).exp2() * std::f64::consts::PI.sqrt() * g * b * rg * rg;
            assert!(
                (fd - closed).abs() <= 1e-5 * closed.abs().max(1e-6),
                "y' mismatch at ν = {nu}: fd = {fd:e}, closed = {closed:e}"
            );
            checked += 1;
        }
    }

    #[test]
    fn y_ratio_monotone_decreasing_per_interval() {
        let mut s = Sampler::new(17);
        let intervals = [
            (-30.0, 1.0 - 1e-6),
            (1.0 + 1e-6, 3.0 - 1e-6),
            (3.0 + 1e-6, 5.0 - 1e-6),
            (5.0 + 1e-6, 7.0 - 1e-6),
        ];
        for &(a, b) in &intervals {
            for _ in 0..50 {
                let u = s.in_range(a, b);
                let v = s.in_range(a, b);
                let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                if hi - lo < 1e-9 {
                    continue;
                }
                assert!(
                    y_ratio(lo).value > y_ratio(hi).value,
                    "monotonicity violated on ({a}, {b}) at {lo} < {hi}"
                );
            }
        }
    }

    #[test]
    fn level_intervals() {
        assert_eq!(level_interval(1), (f64::NEG_INFINITY, 1.0));
        assert_eq!(level_interval(2), (1.0, 3.0));
        assert_eq!(level_interval(4), (5.0, 7.0));
        // golden roots sit inside their intervals
        assert!((1.0..3.0).contains(&1.71369));
        assert!((5.0..7.0).contains(&5.82117));
    }

    #[test]
    fn solve_level_golden_cells() {
        // printed golden values, one per table column
        assert_abs(solve_level(-2.18, 1, 1e-12).unwrap(), 0.77051, 5e-4, "(−2.18, 1)");
        assert_abs(solve_level(0.23, 1, 1e-12).unwrap(), -0.311391, 5e-4, "(0.23, 1)");
        // exact-angle η for the cells where the label rounding matters
        let eta051 = table1_eta(4);
        assert_abs(solve_level(eta051, 4, 1e-12).unwrap(), 5.82117, 5e-4, "(0.51, 4)");
        // exact even-integer zero
        assert_eq!(solve_level(0.0, 3, 1e-12).unwrap(), 4.0);
    }

    #[test]
    fn solve_level_against_high_precision_roots() {
        // 40-digit roots for the exact-angle η of the 0.51 column
        let eta = table1_eta(4);
        let refs = [
            -0.87506574644750516,
            1.7136944020116914,
            3.7857822871249852,
            5.8211721043709157,
            7.8432581413106648,
        ];
        for (i, &want) in refs.iter().enumerate() {
            let got = solve_level(eta, i as u32 + 1, 1e-12).unwrap();
            assert_abs(got, want, 1e-10, &format!("root M = {}", i + 1));
        }
    }

    #[test]
    fn solve_level_residuals_and_far_left_root() {
        for m in 1..=11 {
            for col in [0usize, 1, 3, 4, 5, 6] {
                let eta = table1_eta(col);
                let nu = solve_level(eta, m, 1e-12).unwrap();
                let r = (y_ratio(nu).value - eta).abs();
                assert!(
                    r <= 1e-10 * (1.0 + eta.abs()),
                    "residual {r:e} at col {col}, M = {m}"
                );
            }
        }
        // deep I₁ root via the doubling expansion
        let nu = solve_level(50.0, 1, 1e-12).unwrap();
        assert!(nu < -1000.0);
        assert!((y_ratio(nu).value - 50.0).abs() <= 1e-10 * 51.0);
    }

    #[test]
    fn solve_level_uniqueness_scan() {
        // one sign change of y − η per interval on a 1e-2 grid
        for col in [0usize, 4, 6] {
            let eta = table1_eta(col);
            for m in 1..=6u32 {
                let (lo, hi) = level_interval(m);
                let lo = if m == 1 { -30.0 } else { lo + 0.005 };
                let hi = hi - 0.005;
                let mut changes = 0;
                let mut prev = y_ratio(lo).value - eta;
                let mut x = lo + 0.01;
                while x < hi {
                    let cur = y_ratio(x).value - eta;
                    if prev.signum() != cur.signum() {
                        changes += 1;
                    }
                    prev = cur;
                    x += 0.01;
                }
                assert_eq!(changes, 1, "col {col}, M = {m}: {changes} sign changes");
            }
        }
    }

    #[test]
    fn solve_level_monotone_in_eta() {
        // along each golden row the root decreases as η increases
        for m in 1..=11u32 {
            let mut prev = f64::INFINITY;
            for col in 0..TABLE1_COLS {
                let eta = table1_eta(col);
                let nu = solve_level(eta, m, 1e-12).unwrap();
                assert!(nu < prev, "row M = {m} not strictly decreasing in η");
                prev = nu;
            }
        }
    }

    #[test]
    fn spectrum_special_cases() {
        let neumann = spectrum(&xi_to_eta(std::f64::consts::FRAC_PI_2).unwrap(), 3, 1e-10).unwrap();
        let energies: Vec<f64> = neumann.levels().iter().map(|l| l.energy).collect();
        assert_eq!(energies, vec![0.5, 2.5, 4.5]);
        let dirichlet = spectrum(&xi_to_eta(0.0).unwrap(), 2, 1e-10).unwrap();
        let nus: Vec<f64> = dirichlet.levels().iter().map(|l| l.nu).collect();
        assert_eq!(nus, vec![1.0, 3.0]);
    }

    #[test]
    fn spectrum_finite_eta() {
        let p = ExtensionParameter::from_eta(0.23).unwrap();
        let s = spectrum(&p, 2, 1e-10).unwrap();
        assert_abs(s.levels()[0].nu, -0.311391, 5e-4, "ν₁(0.23)");
        assert_abs(s.levels()[1].nu, 1.86885, 5e-4, "ν₂(0.23)");
        for l in s.levels() {
            assert_eq!(l.energy, l.nu + 0.5);
            assert!(l.c > 0.0);
        }
        assert!(s.levels().windows(2).all(|w| w[0].nu < w[1].nu));
        assert!(s.eigenfunction(1).is_ok());
        assert!(s.eigenfunction(3).is_err());
    }

    #[test]
    fn levels_sit_in_their_intervals_separated_by_one_asymptote() {
        let p = ExtensionParameter::from_eta(-1.4).unwrap();
        let s = spectrum(&p, 8, 1e-10).unwrap();
        for l in s.levels() {
            let (lo, hi) = level_interval(l.level_index);
            assert!(l.nu > lo && l.nu < hi, "ν = {} outside I_{}", l.nu, l.level_index);
        }
        for w in s.levels().windows(2) {
            let odd_between = (0..=30)
                .map(|n| 2.0 * n as f64 + 1.0)
                .filter(|a| (w[0].nu..w[1].nu).contains(a))
                .count();
            assert_eq!(odd_between, 1, "asymptotes between {} and {}", w[0].nu, w[1].nu);
        }
    }

    #[test]
    fn table1_grid_matches_golden_except_truncated_cell() {
        let grid = table1_grid(1e-12).unwrap();
        let mut failures = Vec::new();
        for col in 0..TABLE1_COLS {
            for m in 1..=TABLE1_ROWS {
                let dev = (grid[col][m - 1] - TABLE1_GOLDEN[col][m - 1]).abs();
                if dev > table1_cell_tolerance(col, m) {
                    failures.push((col, m, dev));
                }
            }
        }
        // the single known-truncated print is the only expected miss
        assert_eq!(
            failures.len(),
            1,
            "unexpected golden mismatches: {failures:?}"
        );
        assert_eq!((failures[0].0, failures[0].1), (6, 1));
        assert_abs(grid[6][0], -9.9590022267688402, 1e-9, "converged (2.18, 1) root");
    }

    #[test]
    fn tolerance_validation() {
        assert!(solve_level(0.5, 1, 1e-13).is_err());
        assert!(solve_level(f64::INFINITY, 1, 1e-10).is_err());
        assert!(spectrum(&ExtensionParameter::from_eta(0.5).unwrap(), 0, 1e-10).is_err());
        assert!(spectrum(&ExtensionParameter::from_eta(0.5).unwrap(), 61, 1e-10).is_err());
    }
}
