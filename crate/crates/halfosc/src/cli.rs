//! Command implementations behind the `halfosc` binary: spectra,
//! eigenfunction samples, the golden-table comparison, Gram reports,
//! expansions of user-supplied grid functions, and the combined full-line
//! basis check. Everything renders to CSV or JSON with 17-significant-digit
//! numbers and no volatile fields, so identical configurations produce
//! byte-identical output.

use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::hilbert::{
    boundary_residual, fullline_basis, gram_deviation, gram_matrix, project, quadrature_rule,
    reconstruct, two_sided_gram, Evaluable, GridFunction, QuadratureRule, TwoSidedRule,
};
use crate::spectrum::{
    spectrum, table1_cell_tolerance, table1_eta, table1_grid, xi_to_eta, Eta, ExtensionParameter,
    TABLE1_COLS, TABLE1_GOLDEN, TABLE1_LABELS, TABLE1_ROWS,
};

/// Gram reports fail verification above this deviation.
pub const GRAM_FAIL_THRESHOLD: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Resolved configuration shared by all subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub param: Option<ExtensionParameter>,
    pub levels: u32,
    pub tol: f64,
    pub x_max: f64,
    pub panel_width: f64,
    pub nodes_per_panel: u32,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Build from the mutually exclusive --xi/--eta pair. `require_param`
    /// is false only for table1.
    #[allow(clippy::too_many_arguments)]
    pub fn resolve(
        xi: Option<f64>,
        eta: Option<f64>,
        require_param: bool,
        levels: u32,
        tol: f64,
        x_max: f64,
        panel_width: f64,
        nodes_per_panel: u32,
        format: OutputFormat,
        output: Option<PathBuf>,
    ) -> Result<Self, Error> {
        let param = match (xi, eta) {
            (Some(_), Some(_)) => {
                return Err(Error::invalid(
                    "flags --xi and --eta are mutually exclusive".to_string(),
                ))
            }
            (Some(x), None) => Some(xi_to_eta(x)?),
            (None, Some(e)) => Some(ExtensionParameter::from_eta(e)?),
            (None, None) => {
                if require_param {
                    return Err(Error::invalid(
                        "exactly one of --xi or --eta is required".to_string(),
                    ));
                }
                None
            }
        };
        if tol.is_nan() || tol < 1e-12 {
            return Err(Error::invalid(format!("--tol {tol:e} must be >= 1e-12")));
        }
        if levels == 0 {
            return Err(Error::invalid("--levels must be >= 1".to_string()));
        }
        Ok(RunConfig {
            param,
            levels,
            tol,
            x_max,
            panel_width,
            nodes_per_panel,
            format,
            output,
        })
    }

    fn rule(&self) -> Result<QuadratureRule, Error> {
        quadrature_rule(self.x_max, self.panel_width, self.nodes_per_panel)
    }

    fn param(&self) -> &ExtensionParameter {
        self.param.as_ref().expect("parameter validated upstream")
    }

    fn config_json(&self, command: &str) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(command));
        if let Some(p) = &self.param {
            m.insert("xi".into(), json!(p.xi));
            match p.eta {
                Eta::Finite(e) => m.insert("eta".into(), json!(e)),
                Eta::Infinite => m.insert("eta".into(), json!("infinite")),
            };
        }
        m.insert("levels".into(), json!(self.levels));
        m.insert("tol".into(), json!(self.tol));
        m.insert("x_max".into(), json!(self.x_max));
        m.insert("panel_width".into(), json!(self.panel_width));
        m.insert("nodes_per_panel".into(), json!(self.nodes_per_panel));
        m.insert("format".into(), json!(self.format.as_str()));
        Value::Object(m)
    }

    fn config_csv_header(&self, command: &str) -> String {
        let mut s = format!("# command: {command}\n");
        if let Some(p) = &self.param {
            s.push_str(&format!("# xi: {}\n", fmt17(p.xi)));
            match p.eta {
                Eta::Finite(e) => s.push_str(&format!("# eta: {}\n", fmt17(e))),
                Eta::Infinite => s.push_str("# eta: infinite\n"),
            }
        }
        s.push_str(&format!(
            "# levels: {}\n# tol: {}\n# x_max: {}\n# panel_width: {}\n# nodes_per_panel: {}\n",
            self.levels,
            fmt17(self.tol),
            fmt17(self.x_max),
            fmt17(self.panel_width),
            self.nodes_per_panel
        ));
        s
    }
}

/// Rendered command output plus the verification verdict that decides the
/// exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub body: String,
    pub verification_failed: bool,
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn render(
    config: &RunConfig,
    command: &str,
    csv_body: String,
    results: Value,
    diagnostics: Value,
    failed: bool,
) -> CmdOutput {
    let body = match config.format {
        OutputFormat::Csv => format!("{}{}", config.config_csv_header(command), csv_body),
        OutputFormat::Json => {
            let doc = json!({
                "config": config.config_json(command),
                "results": results,
                "diagnostics": diagnostics,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    CmdOutput {
        body,
        verification_failed: failed,
    }
}

// ---------------------------------------------------------------- spectrum

/// One row per level: M, ν, energy, c, and the origin boundary residual.
pub fn cmd_spectrum(config: &RunConfig) -> Result<CmdOutput, Error> {
    let param = config.param();
    let spec = spectrum(param, config.levels, config.tol)?;
    let mut rows = Vec::new();
    let mut max_residual = 0.0f64;
    for l in spec.levels() {
        let br = boundary_residual(l.nu, param.xi)?;
        if let Eta::Finite(e) = param.eta {
            let r = (crate::spectrum::y_ratio(l.nu).value - e).abs();
            max_residual = max_residual.max(r);
        }
        rows.push((l.level_index, l.nu, l.energy, l.c, br));
    }
    let mut csv = String::from("M,nu,energy,c,boundary_residual\n");
    for (m, nu, en, c, br) in &rows {
        csv.push_str(&format!(
            "{m},{},{},{},{}\n",
            fmt17(*nu),
            fmt17(*en),
            fmt17(*c),
            fmt17(*br)
        ));
    }
    let results = json!({
        "levels": rows
            .iter()
            .map(|(m, nu, en, c, br)| {
                json!({"M": m, "nu": nu, "energy": en, "c": c, "boundary_residual": br})
            })
            .collect::<Vec<_>>(),
    });
    let diagnostics = json!({ "max_eigenvalue_residual": max_residual });
    Ok(render(config, "spectrum", csv, results, diagnostics, false))
}

// ------------------------------------------------------------------ table1

/// Golden-table comparison: computed eigen-orders against the embedded
/// reference grid, per-cell deviations, PASS/FAIL per tolerance.
pub fn cmd_table1(config: &RunConfig) -> Result<CmdOutput, Error> {
    let grid = table1_grid(1e-12)?;
    let mut csv = String::from("eta_label,M,computed,golden,abs_dev,tolerance,status\n");
    let mut cells = Vec::new();
    let mut max_dev = 0.0f64;
    let mut failed = false;
    for m in 1..=TABLE1_ROWS {
        for col in 0..TABLE1_COLS {
            let computed = grid[col][m - 1];
            let golden = TABLE1_GOLDEN[col][m - 1];
            let dev = (computed - golden).abs();
            let tol = table1_cell_tolerance(col, m);
            let pass = dev <= tol;
            failed |= !pass;
            max_dev = max_dev.max(dev);
            csv.push_str(&format!(
                "{},{m},{},{},{},{},{}\n",
                TABLE1_LABELS[col],
                fmt17(computed),
                fmt17(golden),
                fmt17(dev),
                fmt17(tol),
                if pass { "PASS" } else { "FAIL" }
            ));
            cells.push(json!({
                "eta_label": TABLE1_LABELS[col],
                "eta": table1_eta(col),
                "M": m,
                "computed": computed,
                "golden": golden,
                "abs_dev": dev,
                "tolerance": tol,
                "pass": pass,
            }));
        }
    }
    csv.push_str(&format!("# max_deviation: {}\n", fmt17(max_dev)));
    csv.push_str(&format!(
        "# overall: {}\n",
        if failed { "FAIL" } else { "PASS" }
    ));
    let results = json!({ "cells": cells, "overall_pass": !failed });
    let diagnostics = json!({ "max_deviation": max_dev });
    Ok(render(config, "table1", csv, results, diagnostics, failed))
}

// ------------------------------------------------------------------ eigfun

/// Samples of the normalized eigenfunction of level m on a uniform grid.
pub fn cmd_eigfun(
    config: &RunConfig,
    m: u32,
    grid_step: f64,
    grid_max: Option<f64>,
) -> Result<CmdOutput, Error> {
    if m == 0 || m > config.levels {
        return Err(Error::invalid(format!(
            "--m {m} outside 1..=levels ({})",
            config.levels
        )));
    }
    if !(grid_step > 0.0 && grid_step <= 1.0) {
        return Err(Error::invalid(format!(
            "--grid-step {grid_step} outside (0, 1]"
        )));
    }
    let grid_max = grid_max.unwrap_or(config.x_max);
    let spec = spectrum(config.param(), config.levels, config.tol)?;
    let level = *spec.level(m).expect("validated above");
    let handle = spec.eigenfunction(m)?;
    let n = (grid_max / grid_step + 1e-9).floor() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| i as f64 * grid_step).collect();
    let values = handle.values_on(&grid)?;
    let mut csv = format!(
        "# M: {}\n# nu: {}\n# energy: {}\n# c: {}\nx,value\n",
        level.level_index,
        fmt17(level.nu),
        fmt17(level.energy),
        fmt17(level.c)
    );
    for (x, v) in grid.iter().zip(&values) {
        csv.push_str(&format!("{},{}\n", fmt17(*x), fmt17(*v)));
    }
    let results = json!({
        "M": level.level_index,
        "nu": level.nu,
        "energy": level.energy,
        "c": level.c,
        "samples": grid
            .iter()
            .zip(&values)
            .map(|(x, v)| json!({"x": x, "value": v}))
            .collect::<Vec<_>>(),
    });
    let diagnostics = json!({ "grid_step": grid_step, "grid_max": grid_max });
    Ok(render(config, "eigfun", csv, results, diagnostics, false))
}

// -------------------------------------------------------------------- gram

/// Gram matrix of the first `levels` normalized eigenfunctions; fails
/// verification when max|G − I| exceeds 1e-5.
pub fn cmd_gram(config: &RunConfig) -> Result<CmdOutput, Error> {
    if config.levels > 20 {
        return Err(Error::invalid(
            "gram: --levels is capped at 20".to_string(),
        ));
    }
    let spec = spectrum(config.param(), config.levels, config.tol)?;
    let rule = config.rule()?;
    let n = config.levels as usize;
    let g = gram_matrix(&spec, n, &rule)?;
    let dev = gram_deviation(&g);
    let failed = dev > GRAM_FAIL_THRESHOLD;
    let mut csv = format!(
        "# max_deviation: {}\n# threshold: {}\n# status: {}\n",
        fmt17(dev),
        fmt17(GRAM_FAIL_THRESHOLD),
        if failed { "FAIL" } else { "PASS" }
    );
    csv.push_str("i,j,value\n");
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            csv.push_str(&format!("{},{},{}\n", i + 1, j + 1, fmt17(*v)));
        }
    }
    let results = json!({
        "gram": g,
        "max_deviation": dev,
        "pass": !failed,
    });
    let diagnostics = json!({
        "threshold": GRAM_FAIL_THRESHOLD,
        "nodes": rule.nodes().len(),
    });
    Ok(render(config, "gram", csv, results, diagnostics, failed))
}

// ------------------------------------------------------------------ expand

/// Expansion of a user-supplied grid function in the eigenbasis:
/// coefficients, squared norm, Parseval partial sums, and truncation
/// residuals at n ∈ {levels/4, levels/2, levels}.
pub fn cmd_expand(config: &RunConfig, input: &Path) -> Result<CmdOutput, Error> {
    let file = std::fs::File::open(input)
        .map_err(|e| Error::invalid(format!("cannot open {}: {e}", input.display())))?;
    let f = GridFunction::read_csv(BufReader::new(file))?;
    let rule = config.rule()?;
    let spec = spectrum(config.param(), config.levels, config.tol)?;
    let n = config.levels as usize;
    let coeffs = project(&f, &spec, n, &rule)?;
    let fv = crate::hilbert::resample_to_nodes(&f, &rule)?;
    let f_nodes = GridFunction::new(rule.nodes().to_vec(), fv.clone())?;
    let norm_sq = crate::hilbert::inner_product(&f_nodes, &f_nodes, &rule)?;
    let mut partials = Vec::with_capacity(n);
    let mut acc = 0.0;
    for a in &coeffs {
        acc += a * a;
        partials.push(acc);
    }
    let mut truncations: Vec<usize> = vec![(n / 4).max(1), (n / 2).max(1), n];
    truncations.dedup();
    let mut residuals = Vec::new();
    for &k in &truncations {
        let recon = reconstruct(&coeffs[..k], &spec, rule.nodes())?;
        let diff: Vec<f64> = fv.iter().zip(recon.values()).map(|(a, b)| a - b).collect();
        let d = GridFunction::new(rule.nodes().to_vec(), diff)?;
        let r2 = crate::hilbert::inner_product(&d, &d, &rule)?;
        residuals.push(r2.max(0.0).sqrt());
    }
    let mut csv = format!("# input: {}\n# norm_sq: {}\n", input.display(), fmt17(norm_sq));
    csv.push_str("M,coefficient,parseval_partial\n");
    for (i, (a, p)) in coeffs.iter().zip(&partials).enumerate() {
        csv.push_str(&format!("{},{},{}\n", i + 1, fmt17(*a), fmt17(*p)));
    }
    csv.push_str("truncation_n,residual\n");
    for (k, r) in truncations.iter().zip(&residuals) {
        csv.push_str(&format!("{k},{}\n", fmt17(*r)));
    }
    let results = json!({
        "coefficients": coeffs,
        "norm_sq": norm_sq,
        "parseval_partials": partials,
        "truncations": truncations,
        "residuals": residuals,
    });
    let diagnostics = json!({ "input_points": f.len() });
    Ok(render(config, "expand", csv, results, diagnostics, false))
}

// ---------------------------------------------------------------- fullline

/// Combined mirrored basis report: sample evaluations of the first 4+4
/// elements and their two-sided Gram check.
pub fn cmd_fullline(config: &RunConfig, sigma: f64) -> Result<CmdOutput, Error> {
    let xi_param = config.param();
    let sigma_param = xi_to_eta(sigma)?;
    const FAMILY: u32 = 4;
    let basis = fullline_basis(xi_param, &sigma_param, FAMILY, config.tol)?;
    let rule = TwoSidedRule::from_half(&config.rule()?);
    let g = two_sided_gram(&basis, &rule)?;
    let dev = gram_deviation(&g);
    let mut cross_max = 0.0f64;
    for row in g.iter().take(FAMILY as usize) {
        for v in row.iter().skip(FAMILY as usize) {
            cross_max = cross_max.max(v.abs());
        }
    }
    let failed = dev > GRAM_FAIL_THRESHOLD;
    // compact symmetric sample grid
    let sample_grid: Vec<f64> = (-10..=10).map(|i| i as f64 * 0.5).collect();
    let mut samples_rows = Vec::new();
    for (idx, e) in basis.elements().enumerate() {
        let vals = e.eval_many(&sample_grid)?;
        let family = if idx < FAMILY as usize { "positive" } else { "negative" };
        for (x, v) in sample_grid.iter().zip(vals) {
            samples_rows.push((idx + 1, family, *x, v));
        }
    }
    let mut csv = format!(
        "# sigma: {}\n# gram_max_deviation: {}\n# cross_family_max: {}\n# status: {}\n",
        fmt17(sigma),
        fmt17(dev),
        fmt17(cross_max),
        if failed { "FAIL" } else { "PASS" }
    );
    csv.push_str("element,family,x,value\n");
    for (idx, family, x, v) in &samples_rows {
        csv.push_str(&format!("{idx},{family},{},{}\n", fmt17(*x), fmt17(*v)));
    }
    let results = json!({
        "gram": g,
        "gram_max_deviation": dev,
        "cross_family_max": cross_max,
        "samples": samples_rows
            .iter()
            .map(|(i, fam, x, v)| json!({"element": i, "family": fam, "x": x, "value": v}))
            .collect::<Vec<_>>(),
        "pass": !failed,
    });
    let diagnostics = json!({ "family_size": FAMILY, "sigma": sigma });
    Ok(render(config, "fullline", csv, results, diagnostics, failed))
}

// ----------------------------------------------------------- exit mapping

/// Exit code classes: 0 success, 1 numeric/verification failure, 2
/// usage/input error.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::InvalidInput(_) => 2,
        Error::Eval(_) | Error::Solver(_) => 1,
    }
}
