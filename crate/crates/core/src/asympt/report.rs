use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::fit::{fit_free_exponent, fit_log_cubic, FitResult, MIN_FIT_SAMPLES};
use super::mainterm::semianalytic_leading_coefficient;
use super::moments::{e_mean_square, moment_integral};
use crate::constants::ConstantsRegistry;
use crate::divisor::{delta_star_mean_square, DivisorTable};
use crate::error::{Error, Result};
use crate::meansq::Sample;

/// One row of the ratio table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "I_star")]
    pub i_star: f64,
    /// I*(T) / (T^{4/3} log^3 T).
    pub ratio_14: f64,
    /// int_0^T E^2 / (B T^{3/2}).
    pub ratio_16: f64,
    /// int_0^x Delta*^2 / (A x^{3/2}) at x = T / 2 pi.
    pub delta_star_ratio: f64,
    pub e_sq_integral: f64,
    pub delta_star_sq_integral: f64,
    /// int_0^x Delta*^2 - A x^{3/2}.
    #[serde(rename = "F")]
    pub f_residual: f64,
    /// int_0^T E^2 - B T^{3/2}.
    #[serde(rename = "R")]
    pub r_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitSummary {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
    pub residual_rms: f64,
    pub relative_rms: f64,
    pub condition: f64,
}

impl From<&FitResult> for FitSummary {
    fn from(f: &FitResult) -> Self {
        let [c3, c2, c1, c0] = f.coeffs;
        Self {
            c3,
            c2,
            c1,
            c0,
            residual_rms: f.residual_rms,
            relative_rms: f.relative_rms,
            condition: f.condition,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
    /// I*(T) = T^{4/3} P3(log T); absent with fewer than the minimum samples.
    pub fit: Option<FitSummary>,
    #[serde(skip)]
    pub fit_detail: Option<FitResult>,
    /// Exponent selected by the free-exponent scan over [1.0, 1.7].
    pub free_exponent: Option<f64>,
    /// min over rows of ratio_14: the lower-bound constant.
    pub lower_bound_constant: Option<f64>,
    pub c3_semianalytic: f64,
}

pub const FREE_EXPONENT_RANGE: (f64, f64) = (1.0, 1.7);
pub const FREE_EXPONENT_POINTS: usize = 71;

/// Builds the ratio table from full sweep samples (starting at t = 0).
pub fn ratio_report(
    t_grid: &[f64],
    samples: &[Sample],
    table: &DivisorTable,
    constants: &ConstantsRegistry,
) -> Result<RatioReport> {
    let mut rows = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        if !(t > 1.0) {
            return Err(Error::InvalidArgument(format!("report ordinate T = {t} must exceed 1")));
        }
        let i_star = moment_integral(2.0, t, samples)?;
        let e_sq = e_mean_square(t, samples)?;
        let x = t / (2.0 * PI);
        let ds_sq = delta_star_mean_square(x, table)?;
        let l = t.ln();
        rows.push(RatioRow {
            t,
            i_star,
            ratio_14: i_star / (t.powf(4.0 / 3.0) * l.powi(3)),
            ratio_16: e_sq / (constants.b * t.powf(1.5)),
            delta_star_ratio: ds_sq / (constants.a * x.powf(1.5)),
            e_sq_integral: e_sq,
            delta_star_sq_integral: ds_sq,
            f_residual: ds_sq - constants.a * x.powf(1.5),
            r_residual: e_sq - constants.b * t.powf(1.5),
        });
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.t, r.i_star)).collect();
    let span_ok = pts.len() >= MIN_FIT_SAMPLES;
    let fit_detail = if span_ok { fit_log_cubic(&pts, 4.0 / 3.0).ok() } else { None };
    let free_exponent = if span_ok {
        fit_free_exponent(&pts, FREE_EXPONENT_RANGE.0, FREE_EXPONENT_RANGE.1, FREE_EXPONENT_POINTS)
            .ok()
            .map(|f| f.best.exponent)
    } else {
        None
    };
    let lower_bound_constant = rows.iter().map(|r| r.ratio_14).reduce(f64::min);
    Ok(RatioReport {
        fit: fit_detail.as_ref().map(FitSummary::from),
        fit_detail,
        free_exponent,
        lower_bound_constant,
        c3_semianalytic: semianalytic_leading_coefficient(),
        rows,
    })
}
