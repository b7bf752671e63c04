use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::rs_tables::CORRECTIONS;
use crate::numeric::{reduce_angle, DoubleDouble, Neumaier};

/// theta(t) - (t/2 log(t/2pi) - t/2 - pi/8): the Stirling corrections.
#[inline]
pub(super) fn theta_tail(t: f64) -> f64 {
    let u = 1.0 / (t * t);
    (1.0 / 48.0 + u * (7.0 / 5760.0 + u * (31.0 / 80640.0))) / t
}

/// theta(t) in double-double, for t >= 1.
pub(super) fn theta_dd(t: f64) -> DoubleDouble {
    let log_ratio = DoubleDouble::from_f64(t).ln() - DoubleDouble::LN_2PI;
    let half = t * 0.5;
    (log_ratio.mul_f64(half)).add_f64(-half) - DoubleDouble::PI_OVER_8 + DoubleDouble::from_f64(theta_tail(t))
}

const LOG_CACHE: usize = 4096;

fn log_table() -> &'static [DoubleDouble] {
    static TABLE: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=LOG_CACHE)
            .map(|n| if n == 0 { DoubleDouble::ZERO } else { DoubleDouble::from_f64(n as f64).ln() })
            .collect()
    })
}

#[inline]
fn log_dd(n: usize) -> DoubleDouble {
    if n <= LOG_CACHE {
        log_table()[n]
    } else {
        DoubleDouble::from_f64(n as f64).ln()
    }
}

/// Riemann-Siegel Z(t) with remainder corrections through `order`, plus the
/// size of the first omitted correction.
pub(super) fn z_rs(t: f64, order: usize) -> (f64, f64) {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as usize;
    let theta = theta_dd(t);

    let mut main = Neumaier::default();
    for k in 1..=n {
        let phase = reduce_angle(theta - log_dd(k).mul_f64(t));
        main.add(phase.cos() / (k as f64).sqrt());
    }

    let p = 1.0 - 2.0 * (a - n as f64);
    let inv_a = 1.0 / a;
    let mut series = Complex64::new(0.0, 0.0);
    let mut scale = 1.0;
    for table in CORRECTIONS.iter().take(order + 1) {
        series += horner(table, p) * scale;
        scale *= inv_a;
    }
    let omitted = CORRECTIONS
        .get(order + 1)
        .map(|table| horner(table, p).norm() * scale)
        .unwrap_or(scale);

    let delta = theta_tail(t);
    let rotated = Complex64::from_polar(1.0, delta) * series;
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let prefactor = 2.0 * sign / a.sqrt();
    (2.0 * main.value() + prefactor * rotated.re, 2.0 * omitted / a.sqrt())
}

#[inline]
fn horner(coeffs: &[[f64; 2]], p: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * p + Complex64::new(c[0], c[1]);
    }
    acc
}
