use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_FIT_SAMPLES: usize = 8;
pub const MIN_FIT_OCTAVES: f64 = 3.0;

/// Least-squares fit of value / scale^exponent by a cubic in log(scale).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub exponent: f64,
    /// [c3, c2, c1, c0].
    pub coeffs: [f64; 4],
    pub residual_rms: f64,
    /// rms of the residuals relative to the fitted quantity.
    pub relative_rms: f64,
    /// Condition number of the normal equations in the raw basis {1, L, L^2, L^3}.
    pub condition: f64,
    pub sample_count: usize,
}

impl FitResult {
    /// scale^exponent * P3(log scale).
    pub fn predict(&self, scale: f64) -> f64 {
        scale.powf(self.exponent) * self.cubic(scale.ln())
    }

    pub fn cubic(&self, l: f64) -> f64 {
        let [c3, c2, c1, c0] = self.coeffs;
        ((c3 * l + c2) * l + c1) * l + c0
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub fn fit_log_cubic(samples: &[(f64, f64)], exponent: f64) -> Result<FitResult> {
    if samples.len() < MIN_FIT_SAMPLES {
        return Err(Error::Precondition(format!(
            "need at least {MIN_FIT_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    if samples.iter().any(|&(s, v)| !(s > 0.0) || !s.is_finite() || !v.is_finite()) {
        return Err(Error::InvalidArgument("scales must be positive and values finite".into()));
    }
    let lo = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let hi = samples.iter().map(|s| s.0).fold(0.0, f64::max);
    if (hi / lo).log2() < MIN_FIT_OCTAVES - 1e-9 {
        return Err(Error::Precondition(format!(
            "scales span {:.3} octaves, need {MIN_FIT_OCTAVES}",
            (hi / lo).log2()
        )));
    }

    let ls: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|&(s, v)| v / s.powf(exponent)).collect();
    let mid = 0.5 * (lo.ln() + hi.ln());
    let half = 0.5 * (hi.ln() - lo.ln());
    let m = samples.len();

    let centred = DMatrix::from_fn(m, 4, |i, j| ((ls[i] - mid) / half).powi(j as i32));
    let svd = centred.clone().svd(true, true);
    let sv = &svd.singular_values;
    let smax = sv.max();
    let smin = sv.min();
    if !(smin > 1e-12 * smax) {
        return Err(Error::Conditioning(format!("singular values {smin:e} / {smax:e}")));
    }
    let b = svd
        .solve(&DVector::from_vec(ys.clone()), 0.0)
        .map_err(|e| Error::Conditioning(e.to_string()))?;

    // Expand sum_k b_k ((L - mid) / half)^k in powers of L.
    let mut power = [0.0; 4];
    for (k, bk) in b.iter().enumerate() {
        let scale = bk / half.powi(k as i32);
        for (j, p) in power.iter_mut().enumerate().take(k + 1) {
            *p += scale * binomial(k, j) * (-mid).powi((k - j) as i32);
        }
    }
    let coeffs = [power[3], power[2], power[1], power[0]];

    let fitted = &centred * &b;
    let mut ss = 0.0;
    let mut ss_rel = 0.0;
    for (f, y) in fitted.iter().zip(&ys) {
        ss += (y - f).powi(2);
        ss_rel += ((y - f) / f).powi(2);
    }
    let raw = DMatrix::from_fn(m, 4, |i, j| ls[i].powi(j as i32));
    let raw_sv = raw.svd(false, false).singular_values;
    let condition = (raw_sv.max() / raw_sv.min()).powi(2);

    Ok(FitResult {
        exponent,
        coeffs,
        residual_rms: (ss / m as f64).sqrt(),
        relative_rms: (ss_rel / m as f64).sqrt(),
        condition,
        sample_count: m,
    })
}

/// One row of a free-exponent scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentScore {
    pub exponent: f64,
    pub relative_rms: f64,
    pub c3: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeExponentFit {
    pub best: FitResult,
    pub scan: Vec<ExponentScore>,
}

/// Grid search over exponents, selecting the one whose cubic fit has the
/// smallest relative rms residual.
pub fn fit_free_exponent(samples: &[(f64, f64)], lo: f64, hi: f64, points: usize) -> Result<FreeExponentFit> {
    if points < 2 || !(hi > lo) {
        return Err(Error::InvalidArgument("exponent grid needs lo < hi and at least 2 points".into()));
    }
    let mut best: Option<FitResult> = None;
    let mut scan = Vec::with_capacity(points);
    for i in 0..points {
        let beta = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let fit = fit_log_cubic(samples, beta)?;
        scan.push(ExponentScore { exponent: beta, relative_rms: fit.relative_rms, c3: fit.coeffs[0] });
        if best.as_ref().is_none_or(|b| fit.relative_rms < b.relative_rms) {
            best = Some(fit);
        }
    }
    Ok(FreeExponentFit { best: best.expect("grid is nonempty"), scan })
}
