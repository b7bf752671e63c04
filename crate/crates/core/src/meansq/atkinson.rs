use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::divisor::DivisorTable;
use crate::error::{Error, Result};
use crate::numeric::Neumaier;

/// Admissible cutoffs are `ATKINSON_N_LO * T < N < ATKINSON_N_HI * T`.
pub const ATKINSON_N_LO: f64 = 0.5;
pub const ATKINSON_N_HI: f64 = 2.0;

/// Atkinson's formula E(T) ~ sigma1 + sigma2 at cutoff N.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtkinsonEval {
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub n_prime: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub value: f64,
}

/// N' = T/2pi + N/2 - sqrt(N^2/4 + N T / 2pi).
pub fn atkinson_n_prime(t: f64, n: f64) -> f64 {
    let q = t / (2.0 * PI);
    // Written as a quotient to avoid cancelling the two large terms.
    q * q / (q + n / 2.0 + (n * n / 4.0 + n * q).sqrt())
}

/// Weight e(T, n) and phase f(T, n) of the first sum.
pub(crate) fn weight_and_phase(t: f64, n: f64) -> (f64, f64) {
    let u = (PI * n / (2.0 * t)).sqrt();
    let ash = u.asinh();
    let e = (1.0 + PI * n / (2.0 * t)).powf(-0.25) * u / ash;
    let f = 2.0 * t * ash + (2.0 * PI * n * t + PI * PI * n * n).sqrt() - FRAC_PI_4;
    (e, f)
}

pub fn e_atkinson(t: f64, n: usize, table: &DivisorTable) -> Result<AtkinsonEval> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::OutOfRange { what: "T", value: t, lo: 0.0, hi: f64::INFINITY });
    }
    let nf = n as f64;
    if !(nf > ATKINSON_N_LO * t && nf < ATKINSON_N_HI * t) {
        return Err(Error::Precondition(format!(
            "cutoff N = {n} must satisfy {ATKINSON_N_LO} T < N < {ATKINSON_N_HI} T at T = {t}"
        )));
    }
    if n > table.limit() {
        return Err(Error::OutOfRange { what: "N", value: nf, lo: 1.0, hi: table.limit() as f64 });
    }

    let mut s1 = Neumaier::default();
    for k in 1..=n {
        let kf = k as f64;
        let (e, f) = weight_and_phase(t, kf);
        s1.add(table.signed_d(k) * kf.powf(-0.75) * e * f.cos());
    }
    let sigma1 = SQRT_2 * (t / (2.0 * PI)).powf(0.25) * s1.value();

    let n_prime = atkinson_n_prime(t, nf);
    let mut s2 = Neumaier::default();
    for k in 1..=(n_prime.floor() as usize) {
        let kf = k as f64;
        let l = (t / (2.0 * PI * kf)).ln();
        s2.add(f64::from(table.d(k)) / kf.sqrt() / l * (t * l - t + FRAC_PI_4).cos());
    }
    let sigma2 = -2.0 * s2.value();

    Ok(AtkinsonEval { t, n, n_prime, sigma1, sigma2, value: sigma1 + sigma2 })
}
