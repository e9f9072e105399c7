//! Sampled real functions on [0, x_max] and their CSV form.
//!
//! File format (shared with the CLI): two comma-separated columns `x,value`
//! with `.` decimals and LF line endings; lines starting with `#` are
//! metadata; one optional non-numeric header row is skipped; abscissas must
//! be strictly increasing.

use std::io::{BufRead, Write};

use crate::error::Error;

/// Real samples of a function on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self, Error> {
        if grid.len() != values.len() {
            return Err(Error::invalid(format!(
                "grid/value length mismatch: {} vs {}",
                grid.len(),
                values.len()
            )));
        }
        if grid.is_empty() {
            return Err(Error::invalid("empty grid".to_string()));
        }
        if grid.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(Error::invalid("grid and values must be finite".to_string()));
        }
        for (i, w) in grid.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::invalid(format!(
                    "abscissas must be strictly increasing (violated between entries {} and {})",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(GridFunction { grid, values })
    }

    /// Sample a closure on the given grid.
    pub fn sample(grid: Vec<f64>, f: impl Fn(f64) -> f64) -> Result<Self, Error> {
        let values = grid.iter().map(|&x| f(x)).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Values at arbitrary abscissas by piecewise 4-point (cubic) Lagrange
    /// interpolation on the sample grid.
    ///
    /// Requires at least 4 samples, sample spacing at most 0.25, and the
    /// targets to lie inside the sampled range (a 1e-9 overhang is
    /// tolerated and clamped). For smooth data the interpolation error is
    /// bounded by ~0.05·Δ⁴·max|f⁗| (one-sided stencils at the ends; half
    /// that in the interior), far below 1e-6 on the fine grids the CLI
    /// writes (Δ = 0.05 gives ~3e-7·max|f⁗|).
    pub fn interpolate_to(&self, targets: &[f64]) -> Result<Vec<f64>, Error> {
        if self.len() < 4 {
            return Err(Error::invalid(
                "cubic interpolation needs at least 4 samples".to_string(),
            ));
        }
        let max_gap = self
            .grid
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0f64, f64::max);
        if max_gap > 0.25 {
            return Err(Error::invalid(format!(
                "sample spacing {max_gap} exceeds 0.25; grid too coarse to interpolate"
            )));
        }
        let lo = self.grid[0];
        let hi = self.grid[self.len() - 1];
        let mut out = Vec::with_capacity(targets.len());
        for &t in targets {
            if t < lo - 1e-9 || t > hi + 1e-9 {
                return Err(Error::invalid(format!(
                    "target x = {t} outside sampled range [{lo}, {hi}]"
                )));
            }
            let t = t.clamp(lo, hi);
            // stencil of 4 samples centered on the interval containing t
            let k = match self
                .grid
                .binary_search_by(|g| g.partial_cmp(&t).unwrap())
            {
                Ok(i) => i,
                Err(i) => i.saturating_sub(1),
            };
            let start = k.saturating_sub(1).min(self.len() - 4);
            let xs = &self.grid[start..start + 4];
            let ys = &self.values[start..start + 4];
            let mut acc = 0.0;
            for i in 0..4 {
                let mut l = ys[i];
                for j in 0..4 {
                    if j != i {
                        l *= (t - xs[j]) / (xs[i] - xs[j]);
                    }
                }
                acc += l;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Parse the two-column CSV form. Errors carry 1-based line and column
    /// numbers.
    pub fn read_csv(reader: impl BufRead) -> Result<Self, Error> {
        let mut grid = Vec::new();
        let mut values = Vec::new();
        let mut header_allowance = true;
        for (lineno, line) in reader.lines().enumerate() {
            let row = lineno + 1;
            let line = line.map_err(|e| Error::invalid(format!("I/O at row {row}: {e}")))?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split(',');
            let fx = fields.next().unwrap_or("").trim();
            let fv = fields.next().map(str::trim);
            if fields.next().is_some() {
                return Err(Error::invalid(format!(
                    "row {row}: expected 2 columns, found more"
                )));
            }
            let parsed_x = fx.parse::<f64>();
            let fv = match fv {
                Some(v) => v,
                None => {
                    return Err(Error::invalid(format!(
                        "row {row}, column 2: missing value field"
                    )))
                }
            };
            let parsed_v = fv.parse::<f64>();
            match (parsed_x, parsed_v) {
                (Ok(x), Ok(v)) => {
                    header_allowance = false;
                    grid.push(x);
                    values.push(v);
                }
                (bad_x, bad_v) => {
                    if header_allowance {
                        // one non-numeric row up front is a column header
                        header_allowance = false;
                        continue;
                    }
                    let col = if bad_x.is_err() { 1 } else { 2 };
                    let field = if bad_v.is_err() && bad_x.is_ok() { fv } else { fx };
                    return Err(Error::invalid(format!(
                        "row {row}, column {col}: cannot parse '{field}' as a number"
                    )));
                }
            }
        }
        if grid.is_empty() {
            return Err(Error::invalid("no data rows in CSV input".to_string()));
        }
        GridFunction::new(grid, values)
    }

    /// Write the CSV form (17 significant digits, LF endings).
    pub fn write_csv(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "x,value")?;
        for (x, v) in self.grid.iter().zip(&self.values) {
            writeln!(w, "{x:.16e},{v:.16e}")?;
        }
        Ok(())
    }
}
