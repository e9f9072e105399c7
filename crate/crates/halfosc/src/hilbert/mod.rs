//! L²(0, ∞) machinery: quadrature, inner products, orthonormality checks,
//! boundary-condition residuals, basis expansion, and the mirrored
//! full-line basis.

mod fullline;
mod gridfn;
mod quadrature;

pub use fullline::{fullline_basis, two_sided_gram, FullLineBasis, FullLineFn, Side, TwoSidedRule};
pub use gridfn::GridFunction;
pub use quadrature::{
    quadrature_rule, QuadratureRule, DEFAULT_NODES_PER_PANEL, DEFAULT_PANEL_WIDTH, DEFAULT_X_MAX,
};

use crate::error::Error;
use crate::pcf::{pcf_origin, ScaledPcf};
use crate::spectrum::Spectrum;
use quadrature::kahan_dot3;

/// Anything that can be sampled on a batch of abscissas. Batch evaluation
/// is the primitive so that handles backed by inward ODE sweeps can pick
/// up a whole quadrature grid in one pass.
pub trait Evaluable {
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>, Error>;

    fn eval(&self, x: f64) -> Result<f64, Error> {
        Ok(self.eval_many(std::slice::from_ref(&x))?[0])
    }
}

impl Evaluable for ScaledPcf {
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>, Error> {
        self.values_on(xs)
    }
}

/// Adapter for plain closures (test oracles, analytic comparisons).
pub struct FnEval<F: Fn(f64) -> f64>(pub F);

impl<F: Fn(f64) -> f64> Evaluable for FnEval<F> {
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>, Error> {
        Ok(xs.iter().map(|&x| (self.0)(x)).collect())
    }
}

impl Evaluable for GridFunction {
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>, Error> {
        self.interpolate_to(xs)
    }
}

/// ⟨f, g⟩ = Σ wᵢ f(xᵢ) g(xᵢ) over the rule, deterministic left-to-right
/// compensated accumulation.
pub fn inner_product<F: Evaluable + ?Sized, G: Evaluable + ?Sized>(
    f: &F,
    g: &G,
    rule: &QuadratureRule,
) -> Result<f64, Error> {
    let fv = f.eval_many(rule.nodes())?;
    let gv = g.eval_many(rule.nodes())?;
    Ok(kahan_dot3(rule.weights(), &fv, Some(&gv)))
}

/// Gram matrix `G_ij = ⟨cᵢ D_{νᵢ}, cⱼ D_{νⱼ}⟩` of the first n levels.
/// Each unordered pair is integrated once and mirrored.
pub fn gram_matrix(
    spec: &Spectrum,
    n: usize,
    rule: &QuadratureRule,
) -> Result<Vec<Vec<f64>>, Error> {
    if n > spec.levels().len() {
        return Err(Error::domain(format!(
            "gram_matrix: n = {n} exceeds the {} computed levels",
            spec.levels().len()
        )));
    }
    let mut samples = Vec::with_capacity(n);
    for m in 1..=n {
        samples.push(spec.eigenfunction(m as u32)?.values_on(rule.nodes())?);
    }
    let mut g = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = kahan_dot3(rule.weights(), &samples[i], Some(&samples[j]));
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}

/// Max |G − I| over a Gram matrix.
pub fn gram_deviation(g: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in g.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    worst
}

/// Magnitude-based boundary-condition residual at the origin:
/// `| |D_ν(0)·cos ξ| − |D_ν'(0)·sin ξ| |` normalized by
/// `max(|D_ν(0)|, |D_ν'(0)|, 1)`.
///
/// Magnitudes are compared, not signed values: with the standard sign
/// conventions for D_ν the angle recovered from η carries a reflection,
/// and the level sets `y(ν) = η` match the boundary condition up to that
/// documented sign (see [`crate::spectrum::ExtensionParameter`]).
pub fn boundary_residual(nu: f64, xi: f64) -> Result<f64, Error> {
    if !xi.is_finite() || !(0.0..std::f64::consts::PI).contains(&xi) {
        return Err(Error::domain(format!("xi = {xi} outside [0, π)")));
    }
    let (v, d) = pcf_origin(nu);
    let r = (v * xi.cos()).abs() - (d * xi.sin()).abs();
    Ok(r.abs() / v.abs().max(d.abs()).max(1.0))
}

/// Expansion coefficients `a_M = ⟨f, c_M D_{ν_M}⟩`, M = 1..n.
///
/// If f is sampled exactly at the rule nodes its values are used directly;
/// otherwise it is interpolated (cubic; see
/// [`GridFunction::interpolate_to`] for the rejection rules).
pub fn project(
    f: &GridFunction,
    spec: &Spectrum,
    n: usize,
    rule: &QuadratureRule,
) -> Result<Vec<f64>, Error> {
    let fv = resample_to_nodes(f, rule)?;
    let mut coeffs = Vec::with_capacity(n);
    for m in 1..=n {
        let basis = spec.eigenfunction(m as u32)?.values_on(rule.nodes())?;
        coeffs.push(kahan_dot3(rule.weights(), &fv, Some(&basis)));
    }
    Ok(coeffs)
}

/// Node samples of f: exact passthrough when the grid already is the node
/// set, cubic interpolation otherwise.
pub(crate) fn resample_to_nodes(f: &GridFunction, rule: &QuadratureRule) -> Result<Vec<f64>, Error> {
    let nodes = rule.nodes();
    if f.len() == nodes.len()
        && f.grid()
            .iter()
            .zip(nodes)
            .all(|(a, b)| (a - b).abs() <= 1e-12 * b.abs().max(1.0))
    {
        return Ok(f.values().to_vec());
    }
    f.interpolate_to(nodes)
}

/// Pointwise reconstruction `Σ a_M c_M D_{ν_M}(x)` on a grid.
pub fn reconstruct(coeffs: &[f64], spec: &Spectrum, grid: &[f64]) -> Result<GridFunction, Error> {
    if coeffs.len() > spec.levels().len() {
        return Err(Error::domain(format!(
            "reconstruct: {} coefficients but only {} levels",
            coeffs.len(),
            spec.levels().len()
        )));
    }
    let mut acc = vec![0.0f64; grid.len()];
    let mut comp = vec![0.0f64; grid.len()];
    for (idx, &a) in coeffs.iter().enumerate() {
        let basis = spec.eigenfunction(idx as u32 + 1)?.values_on(grid)?;
        for (i, b) in basis.iter().enumerate() {
            let term = a * b;
            let y = term - comp[i];
            let t = acc[i] + y;
            comp[i] = (t - acc[i]) - y;
            acc[i] = t;
        }
    }
    GridFunction::new(grid.to_vec(), acc)
}
