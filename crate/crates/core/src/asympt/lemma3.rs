use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::fit::{fit_log_cubic, FitResult};
use crate::divisor::{d2_weighted_sum, DivisorTable};
use crate::error::{Error, Result};

/// Exponent slack in the normalised residual column.
pub const LEMMA3_EPSILON: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lemma3Row {
    pub x: f64,
    pub sum: f64,
    pub main: f64,
    /// (sum - main) / x^{a + 1/2 + eps}.
    pub normalized_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma3Report {
    pub a: f64,
    pub fit: FitResult,
    /// 1 / (pi^2 (a + 1)).
    pub target_c3: f64,
    pub c3_ratio: f64,
    pub rows: Vec<Lemma3Row>,
    pub max_normalized_residual: f64,
}

/// Fits sum_{n <= x} d(n)^2 n^a = x^{a+1} P3(log x) over the grid and compares
/// the leading coefficient with 1 / (pi^2 (a + 1)).
pub fn lemma3_check(x_grid: &[f64], a: f64, table: &DivisorTable) -> Result<Lemma3Report> {
    if !(a > -0.5) {
        return Err(Error::Precondition(format!("a = {a} must exceed -1/2")));
    }
    let sums = x_grid
        .iter()
        .map(|&x| Ok((x, d2_weighted_sum(x, a, table)?)))
        .collect::<Result<Vec<_>>>()?;
    let fit = fit_log_cubic(&sums, a + 1.0)?;
    let rows: Vec<Lemma3Row> = sums
        .iter()
        .map(|&(x, sum)| {
            let main = fit.predict(x);
            Lemma3Row { x, sum, main, normalized_residual: (sum - main) / x.powf(a + 0.5 + LEMMA3_EPSILON) }
        })
        .collect();
    let max_normalized_residual = rows.iter().map(|r| r.normalized_residual.abs()).fold(0.0, f64::max);
    let target_c3 = 1.0 / (PI * PI * (a + 1.0));
    Ok(Lemma3Report { a, c3_ratio: fit.coeffs[0] / target_c3, fit, target_c3, rows, max_normalized_residual })
}
