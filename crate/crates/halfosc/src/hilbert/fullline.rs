//! The combined basis of L²(ℝ) = L²(ℝ⁻) ⊕ L²(ℝ⁺): one half-line eigenbasis
//! supported on x > 0 and a mirrored one (`D̃_ν(x) = D_ν(−x)`) supported on
//! x < 0. Cross-family inner products vanish identically (disjoint
//! supports), so orthonormality of the union reduces to the two half-line
//! Gram checks.

use crate::error::Error;
use crate::pcf::ScaledPcf;
use crate::spectrum::{spectrum, ExtensionParameter, Spectrum};

use super::quadrature::{kahan_dot3, QuadratureRule};
use super::Evaluable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Supported on x ≥ 0.
    Positive,
    /// Supported on x ≤ 0, evaluated as a mirror image.
    Negative,
}

/// One element of the combined basis: a normalized eigenfunction confined
/// to one half-line.
#[derive(Debug, Clone)]
pub struct FullLineFn {
    inner: ScaledPcf,
    side: Side,
}

impl FullLineFn {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn nu(&self) -> f64 {
        self.inner.nu()
    }
}

impl Evaluable for FullLineFn {
    fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>, Error> {
        // evaluate |x| on the supported side, exact zero elsewhere
        let mut out = vec![0.0f64; xs.len()];
        let mut live_idx = Vec::new();
        let mut live_x = Vec::new();
        for (i, &x) in xs.iter().enumerate() {
            match self.side {
                Side::Positive if x >= 0.0 => {
                    live_idx.push(i);
                    live_x.push(x);
                }
                Side::Negative if x <= 0.0 => {
                    live_idx.push(i);
                    live_x.push(-x);
                }
                _ => {}
            }
        }
        let vals = self.inner.values_on(&live_x)?;
        for (i, v) in live_idx.into_iter().zip(vals) {
            out[i] = v;
        }
        Ok(out)
    }
}

/// The two families `{(c·D_ν, 0) : ν ∈ Ω_ξ}` and `{(0, c·D̃_ν) : ν ∈ Ω_σ}`.
#[derive(Debug, Clone)]
pub struct FullLineBasis {
    positive: Vec<FullLineFn>,
    negative: Vec<FullLineFn>,
    spectrum_pos: Spectrum,
    spectrum_neg: Spectrum,
}

impl FullLineBasis {
    pub fn positive_family(&self) -> &[FullLineFn] {
        &self.positive
    }

    pub fn negative_family(&self) -> &[FullLineFn] {
        &self.negative
    }

    /// All elements, positive family first.
    pub fn elements(&self) -> impl Iterator<Item = &FullLineFn> {
        self.positive.iter().chain(self.negative.iter())
    }

    pub fn spectra(&self) -> (&Spectrum, &Spectrum) {
        (&self.spectrum_pos, &self.spectrum_neg)
    }
}

/// Combined basis for boundary angles (ξ on ℝ⁺, σ on the mirrored ℝ⁻),
/// m_max elements per family.
pub fn fullline_basis(
    xi: &ExtensionParameter,
    sigma: &ExtensionParameter,
    m_max: u32,
    tol: f64,
) -> Result<FullLineBasis, Error> {
    let spectrum_pos = spectrum(xi, m_max, tol)?;
    let spectrum_neg = spectrum(sigma, m_max, tol)?;
    let positive = (1..=m_max)
        .map(|m| {
            Ok(FullLineFn {
                inner: spectrum_pos.eigenfunction(m)?,
                side: Side::Positive,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let negative = (1..=m_max)
        .map(|m| {
            Ok(FullLineFn {
                inner: spectrum_neg.eigenfunction(m)?,
                side: Side::Negative,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(FullLineBasis {
        positive,
        negative,
        spectrum_pos,
        spectrum_neg,
    })
}

/// A half-line rule mirrored onto [−x_max, x_max].
#[derive(Debug, Clone)]
pub struct TwoSidedRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl TwoSidedRule {
    pub fn from_half(rule: &QuadratureRule) -> Self {
        let n = rule.nodes().len();
        let mut nodes = Vec::with_capacity(2 * n);
        let mut weights = Vec::with_capacity(2 * n);
        for i in (0..n).rev() {
            nodes.push(-rule.nodes()[i]);
            weights.push(rule.weights()[i]);
        }
        nodes.extend_from_slice(rule.nodes());
        weights.extend_from_slice(rule.weights());
        TwoSidedRule { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn inner_product<F: Evaluable + ?Sized, G: Evaluable + ?Sized>(
        &self,
        f: &F,
        g: &G,
    ) -> Result<f64, Error> {
        let fv = f.eval_many(&self.nodes)?;
        let gv = g.eval_many(&self.nodes)?;
        Ok(kahan_dot3(&self.weights, &fv, Some(&gv)))
    }
}

/// Two-sided Gram matrix of the combined basis (positive family first).
pub fn two_sided_gram(
    basis: &FullLineBasis,
    rule: &TwoSidedRule,
) -> Result<Vec<Vec<f64>>, Error> {
    let elements: Vec<&FullLineFn> = basis.elements().collect();
    let n = elements.len();
    let mut samples = Vec::with_capacity(n);
    for e in &elements {
        samples.push(e.eval_many(&rule.nodes)?);
    }
    let mut g = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = kahan_dot3(&rule.weights, &samples[i], Some(&samples[j]));
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}
