//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with the measured figure (visible with `--nocapture`; the per-test
//! verdict lines of the harness carry the same information).
//!
//! Run with: `cargo test --test acceptance`
//!
//! Criterion 1 compares against the golden reference table. Its first
//! entry in the last column is printed truncated in the reference
//! (−9.95 against the converged −9.95900…), which exceeds even that
//! cell's widened 5e-3 tolerance; the comparison is asserted as stated
//! anyway, so that one test reports the discrepancy honestly instead of
//! hiding it. Every other criterion passes.

use std::time::Instant;

use halfosc::hilbert::{
    boundary_residual, fullline_basis, gram_deviation, gram_matrix, inner_product, project,
    quadrature_rule, reconstruct, two_sided_gram, FnEval, GridFunction, QuadratureRule,
    TwoSidedRule,
};
use halfosc::pcf::{cross_inner_closed, normalization, weber_residual, ScaledPcf};
use halfosc::spectrum::{
    level_interval, solve_level, spectrum, table1_cell_tolerance, table1_eta, table1_grid,
    xi_to_eta, y_ratio, ExtensionParameter, TABLE1_COLS, TABLE1_GOLDEN, TABLE1_LABELS, TABLE1_ROWS,
};

/// Deterministic LCG for the randomized pair criterion.
struct Sampler(u64);

impl Sampler {
    fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

#[test]
fn acceptance_1_table1_reproduction() {
    let started = Instant::now();
    let grid = table1_grid(1e-12).unwrap();
    let elapsed = started.elapsed();
    let mut max_dev = 0.0f64;
    let mut max_eta0_dev = 0.0f64;
    let mut failures = Vec::new();
    for col in 0..TABLE1_COLS {
        for m in 1..=TABLE1_ROWS {
            let dev = (grid[col][m - 1] - TABLE1_GOLDEN[col][m - 1]).abs();
            max_dev = max_dev.max(dev);
            if col == 2 {
                max_eta0_dev = max_eta0_dev.max(dev);
            }
            if dev > table1_cell_tolerance(col, m) {
                failures.push(format!(
                    "(η = {}, M = {m}): computed {:.6}, golden {}, |Δ| = {dev:.2e}",
                    TABLE1_LABELS[col],
                    grid[col][m - 1],
                    TABLE1_GOLDEN[col][m - 1]
                ));
            }
        }
    }
    let runtime_ok = elapsed.as_secs_f64() < 5.0;
    let pass = failures.is_empty() && runtime_ok && max_eta0_dev <= 1e-12;
    report(
        "1 (golden table, 77 cells)",
        pass,
        &format!(
            "max |Δ| = {max_dev:.2e}, η = 0 column max |Δ| = {max_eta0_dev:.1e}, \
             runtime {:.2} s, failing cells: {:?}",
            elapsed.as_secs_f64(),
            failures
        ),
    );
    assert!(runtime_ok, "runtime {:?} exceeds 5 s", elapsed);
    assert!(max_eta0_dev <= 1e-12, "η = 0 column deviation {max_eta0_dev:e}");
    assert!(
        failures.is_empty(),
        "golden cells out of tolerance: {failures:?} (the (2.18, 1) entry is printed \
         truncated in the reference: converged root -9.95900 vs print -9.95)"
    );
}

#[test]
fn acceptance_2_eigenvalue_residuals_and_uniqueness() {
    let mut max_scaled_residual = 0.0f64;
    for col in 0..TABLE1_COLS {
        let eta = table1_eta(col);
        for m in 1..=TABLE1_ROWS as u32 {
            let nu = solve_level(eta, m, 1e-12).unwrap();
            let r = (y_ratio(nu).value - eta).abs() / (1.0 + eta.abs());
            max_scaled_residual = max_scaled_residual.max(r);
        }
    }
    let residual_ok = max_scaled_residual <= 1e-10;

    // uniqueness: one sign change per interval on a 1e-2 scan
    let mut scan_ok = true;
    for col in 0..TABLE1_COLS {
        let eta = table1_eta(col);
        for m in 1..=TABLE1_ROWS as u32 {
            let (ilo, ihi) = level_interval(m);
            let lo = if m == 1 { -30.0 } else { ilo + 0.005 };
            let hi = ihi - 0.005;
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
            if changes != 1 {
                scan_ok = false;
            }
        }
    }
    report(
        "2 (root residuals + uniqueness)",
        residual_ok && scan_ok,
        &format!(
            "max |y(ν)−η|/(1+|η|) = {max_scaled_residual:.2e}, \
             single sign change per interval: {scan_ok}"
        ),
    );
    assert!(residual_ok);
    assert!(scan_ok);
}

#[test]
fn acceptance_3_orthonormality() {
    let rule24 = QuadratureRule::default_rule();
    let rule48 = quadrature_rule(30.0, 1.0, 48).unwrap();
    let mut worst_dev = 0.0f64;
    let mut worst_shift = 0.0f64;
    let mut params: Vec<ExtensionParameter> = [-2.18, 0.0, 0.51, 2.18]
        .iter()
        .map(|&e| ExtensionParameter::from_eta(e).unwrap())
        .collect();
    params.push(xi_to_eta(0.0).unwrap());
    for p in &params {
        let s = spectrum(p, 8, 1e-10).unwrap();
        let g24 = gram_matrix(&s, 8, &rule24).unwrap();
        let g48 = gram_matrix(&s, 8, &rule48).unwrap();
        worst_dev = worst_dev.max(gram_deviation(&g24));
        for i in 0..8 {
            for j in 0..8 {
                worst_shift = worst_shift.max((g24[i][j] - g48[i][j]).abs());
            }
        }
    }
    let pass = worst_dev <= 1e-6 && worst_shift <= 1e-9;
    report(
        "3 (8×8 orthonormality)",
        pass,
        &format!("max |G−I| = {worst_dev:.2e}, node-doubling shift = {worst_shift:.2e}"),
    );
    assert!(worst_dev <= 1e-6, "Gram deviation {worst_dev:e}");
    assert!(worst_shift <= 1e-9, "node doubling moved entries by {worst_shift:e}");
}

#[test]
fn acceptance_4_closed_form_cross_validation() {
    let rule = QuadratureRule::default_rule();
    let mut s = Sampler(2024);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 10 {
        let a = s.in_range(-1.0, 8.0);
        let b = s.in_range(-1.0, 8.0);
        if (a - b).abs() < 1e-3
            || (a - a.round()).abs() < 1e-3
            || (b - b.round()).abs() < 1e-3
        {
            continue;
        }
        let fa = ScaledPcf::new(1.0, a).unwrap();
        let fb = ScaledPcf::new(1.0, b).unwrap();
        let quad = inner_product(&fa, &fb, &rule).unwrap();
        let closed = cross_inner_closed(a, b).unwrap();
        worst = worst.max((quad - closed).abs());
        done += 1;
    }
    let unit = cross_inner_closed(0.0, 1.0).unwrap();
    let unit_err = (unit - 1.0).abs();
    let pass = worst <= 1e-6 && unit_err <= 1e-12;
    report(
        "4 (closed form vs quadrature)",
        pass,
        &format!("max pair discrepancy = {worst:.2e}, |⟨D₀,D₁⟩ − 1| = {unit_err:.2e}"),
    );
    assert!(worst <= 1e-6);
    assert!(unit_err <= 1e-12);
}

#[test]
fn acceptance_5_normalization() {
    let rule = QuadratureRule::default_rule();
    let mut worst = 0.0f64;
    for col in 0..TABLE1_COLS {
        let eta = table1_eta(col);
        for m in 1..=TABLE1_ROWS as u32 {
            let nu = if col == 2 {
                2.0 * m as f64 - 2.0
            } else {
                solve_level(eta, m, 1e-12).unwrap()
            };
            let c = normalization(nu).unwrap().c;
            let f = ScaledPcf::new(1.0, nu).unwrap();
            let norm = inner_product(&f, &f, &rule).unwrap();
            worst = worst.max((c * c * norm - 1.0).abs());
        }
    }
    // the integer branch explicitly: 1/c² = n!·√(π/2)
    let mut int_worst = 0.0f64;
    for n in 0..4u32 {
        let c = normalization(n as f64).unwrap().c;
        let factorial: f64 = (1..=n).map(|k| k as f64).product::<f64>().max(1.0);
        let expected = 1.0 / (factorial * (std::f64::consts::PI / 2.0).sqrt()).sqrt();
        int_worst = int_worst.max((c - expected).abs() / expected);
        let f = ScaledPcf::new(1.0, n as f64).unwrap();
        let norm = inner_product(&f, &f, &rule).unwrap();
        worst = worst.max((c * c * norm - 1.0).abs());
    }
    let pass = worst <= 1e-6 && int_worst <= 1e-12;
    report(
        "5 (normalization)",
        pass,
        &format!("max |c²·⟨D,D⟩ − 1| = {worst:.2e} over 81 orders, integer branch rel err = {int_worst:.2e}"),
    );
    assert!(worst <= 1e-6);
    assert!(int_worst <= 1e-12);
}

#[test]
fn acceptance_6_weber_residuals() {
    let grid: Vec<f64> = (1..=1000).map(|i| i as f64 * 0.01).collect();
    // six eigen-orders across extensions and level depths
    let orders = [
        solve_level(table1_eta(0), 1, 1e-12).unwrap(),
        solve_level(table1_eta(1), 1, 1e-12).unwrap(),
        solve_level(table1_eta(4), 1, 1e-12).unwrap(),
        solve_level(table1_eta(3), 2, 1e-12).unwrap(),
        solve_level(table1_eta(6), 2, 1e-12).unwrap(),
        4.0,
    ];
    let mut worst = 0.0f64;
    let mut worst_ratio = f64::INFINITY;
    for &nu in &orders {
        let base = weber_residual(nu, &grid).unwrap();
        worst = worst.max(base);
        // shifting the operator order must blow the residual up
        let perturbed = halfosc_weber_perturbed(nu, &grid);
        worst_ratio = worst_ratio.min(perturbed / base);
    }
    let pass = worst <= 1e-5 && worst_ratio >= 10.0;
    report(
        "6 (Weber ODE residual)",
        pass,
        &format!("max residual = {worst:.2e}, min perturbation ratio = {worst_ratio:.1e}"),
    );
    assert!(worst <= 1e-5);
    assert!(worst_ratio >= 10.0);
}

/// Residual of D_ν against the operator of order ν + 0.1, assembled from
/// public pieces (5-point stencil on evaluator samples).
fn halfosc_weber_perturbed(nu: f64, grid: &[f64]) -> f64 {
    let ev = halfosc::pcf::PcfEvaluator::new(nu).unwrap();
    let vals: Vec<f64> = ev.values_on(grid).unwrap().into_iter().map(|p| p.0).collect();
    let h = grid[1] - grid[0];
    let inv12h2 = 1.0 / (12.0 * h * h);
    let mut worst = 0.0f64;
    for i in 2..grid.len() - 2 {
        let d2 = (-vals[i - 2] + 16.0 * vals[i - 1] - 30.0 * vals[i] + 16.0 * vals[i + 1]
            - vals[i + 2])
            * inv12h2;
        let x = grid[i];
        let r = d2 + (nu + 0.1 + 0.5 - 0.25 * x * x) * vals[i];
        worst = worst.max(r.abs());
    }
    worst
}

#[test]
fn acceptance_7_lemma_property_suites() {
    use halfosc::specfun::{beta_series, gamma};
    let mut s = Sampler(777);
    let mut checks = 0usize;
    // Lemma 1 sign pattern
    for m in 1..=10 {
        let m = m as f64;
        for _ in 0..5 {
            let pos = s.in_range(2.0 * m - 1.0 + 1e-6, 2.0 * m - 1e-6);
            assert!(beta_series(-pos).value >= 0.0, "β(−ν) < 0 on (2M−1, 2M), ν = {pos}");
            let neg = s.in_range(2.0 * m - 2.0 + 1e-6, 2.0 * m - 1.0 - 1e-6);
            assert!(beta_series(-neg).value < 0.0, "β(−ν) ≥ 0 on (2M−2, 2M−1), ν = {neg}");
            checks += 2;
        }
    }
    for _ in 0..50 {
        let nu = s.in_range(-25.0, -1e-3);
        if (nu - nu.round()).abs() < 1e-6 {
            continue;
        }
        assert!(beta_series(-nu).value >= 0.0, "β(−ν) < 0 for ν = {nu} < 0");
        checks += 1;
    }
    // sign agreement
    let mut agree = 0usize;
    while agree < 60 {
        let nu = s.in_range(-10.0, 20.0);
        if (nu - nu.round()).abs() < 1e-3 {
            continue;
        }
        let g = gamma(-nu).value;
        let b = beta_series(-nu).value;
        assert!((g > 0.0) == (b > 0.0), "sgn Γ(−ν) ≠ sgn β(−ν) at ν = {nu}");
        agree += 1;
        checks += 1;
    }
    // Lemma 2: zeros, asymptotes, monotonicity
    for n in 0..=10 {
        assert_eq!(y_ratio(2.0 * n as f64).value, 0.0);
        checks += 1;
    }
    for &a in &[1.0, 3.0, 5.0, 7.0] {
        assert!(y_ratio(a + 1e-6).value > 1e5);
        assert!(y_ratio(a - 1e-6).value < -1e5);
        checks += 2;
    }
    assert!(y_ratio(-50.0).value > y_ratio(-10.0).value && y_ratio(-10.0).value > 0.0);
    for &(a, b) in &[(-20.0, 1.0f64), (1.0, 3.0), (3.0, 5.0), (5.0, 7.0)] {
        for _ in 0..50 {
            let u = s.in_range(a + 1e-5, b - 1e-5);
            let v = s.in_range(a + 1e-5, b - 1e-5);
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            if hi - lo < 1e-9 {
                continue;
            }
            assert!(y_ratio(lo).value > y_ratio(hi).value);
            checks += 1;
        }
    }
    report(
        "7 (Lemma property suites)",
        true,
        &format!("{checks} sampled sign/monotonicity/zero/asymptote checks passed"),
    );
}

#[test]
fn acceptance_8_completeness_trend() {
    let rule = QuadratureRule::default_rule();
    let mut all_residuals = Vec::new();
    for eta in [0.0, 0.51] {
        let s = spectrum(&ExtensionParameter::from_eta(eta).unwrap(), 20, 1e-10).unwrap();
        let f = GridFunction::new(
            rule.nodes().to_vec(),
            rule.nodes().iter().map(|&x| (-x).exp()).collect(),
        )
        .unwrap();
        let coeffs = project(&f, &s, 20, &rule).unwrap();
        let norm_sq = inner_product(&f, &f, &rule).unwrap();
        // Parseval partial sums: non-decreasing (squares), bounded by ‖f‖²
        let mut acc = 0.0;
        for a in &coeffs {
            acc += a * a;
            assert!(acc <= norm_sq + 1e-8, "Parseval sum {acc} exceeds ‖f‖² = {norm_sq}");
        }
        let mut residuals = Vec::new();
        for &n in &[5usize, 10, 20] {
            let recon = reconstruct(&coeffs[..n], &s, rule.nodes()).unwrap();
            let diff: Vec<f64> = f
                .values()
                .iter()
                .zip(recon.values())
                .map(|(a, b)| a - b)
                .collect();
            let d = GridFunction::new(rule.nodes().to_vec(), diff).unwrap();
            let r2 = inner_product(&d, &d, &rule).unwrap();
            residuals.push(r2.max(0.0).sqrt());
        }
        assert!(
            residuals[0] > residuals[1] && residuals[1] > residuals[2],
            "residuals not strictly decreasing for η = {eta}: {residuals:?}"
        );
        all_residuals.push((eta, residuals));
    }
    report(
        "8 (completeness trend)",
        true,
        &format!("e^(-x) truncation residuals at n = 5, 10, 20: {all_residuals:?}"),
    );
}

#[test]
fn acceptance_9_fullline_combination() {
    let xi = xi_to_eta(0.0).unwrap();
    let sigma = xi_to_eta(std::f64::consts::FRAC_PI_2).unwrap();
    let basis = fullline_basis(&xi, &sigma, 4, 1e-10).unwrap();
    let rule = TwoSidedRule::from_half(&QuadratureRule::default_rule());
    let g = two_sided_gram(&basis, &rule).unwrap();
    let dev = gram_deviation(&g);
    let cross_exact_zero = g
        .iter()
        .take(4)
        .all(|row| row.iter().skip(4).all(|&v| v == 0.0));
    let pass = dev <= 1e-6 && cross_exact_zero;
    report(
        "9 (full-line combined basis)",
        pass,
        &format!("two-sided |G−I| = {dev:.2e}, cross-family exactly zero: {cross_exact_zero}"),
    );
    assert!(dev <= 1e-6);
    assert!(cross_exact_zero);
}

#[test]
fn boundary_residuals_at_solved_roots() {
    // supporting check used by the spectrum CLI column: solved roots meet
    // the origin boundary condition in magnitudes
    let mut worst = 0.0f64;
    for col in [0usize, 3, 6] {
        let eta = table1_eta(col);
        let p = ExtensionParameter::from_eta(eta).unwrap();
        let s = spectrum(&p, 6, 1e-12).unwrap();
        for l in s.levels() {
            worst = worst.max(boundary_residual(l.nu, p.xi).unwrap());
        }
    }
    report(
        "supplement (boundary residuals)",
        worst <= 1e-8,
        &format!("max magnitude residual = {worst:.2e}"),
    );
    assert!(worst <= 1e-8);
}

#[test]
fn projection_identifies_basis_elements() {
    // supporting check: expanding c₁D_{ν₁} reproduces (1, 0, 0, …)
    let rule = QuadratureRule::default_rule();
    let p = ExtensionParameter::from_eta(0.51).unwrap();
    let s = spectrum(&p, 8, 1e-10).unwrap();
    let e1 = s.eigenfunction(1).unwrap();
    let f = GridFunction::new(rule.nodes().to_vec(), e1.values_on(rule.nodes()).unwrap()).unwrap();
    let coeffs = project(&f, &s, 8, &rule).unwrap();
    assert!((coeffs[0] - 1.0).abs() <= 1e-6);
    for &a in &coeffs[1..] {
        assert!(a.abs() <= 1e-6);
    }
    // quick closure-oracle cross-check of the same machinery:
    // ∫₀^∞ e^{-x²} dx = √π/2
    let gauss = FnEval(|x: f64| (-0.5 * x * x).exp());
    let n = inner_product(&gauss, &gauss, &rule).unwrap();
    assert!((n - 0.5 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
}
