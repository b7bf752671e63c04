use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::atkinson_a1;
use crate::divisor::DivisorTable;
use crate::error::{Error, Result};
use crate::numeric::{integrate_adaptive, Neumaier};

pub const INNER_REL_TOL: f64 = 1e-8;
const MAX_INTERVALS: usize = 4000;

/// int_0^inf sin^2(y) y^{-4/3} dy = (3/2) 2^{1/3} Gamma(2/3) sin(pi/3).
pub const SIN2_MOMENT: f64 = 2.216_265_134_402_203_8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MainTermEval {
    #[serde(rename = "T")]
    pub t: f64,
    pub n_max: usize,
    pub value: f64,
}

#[inline]
fn half_a1() -> f64 {
    0.5 * atkinson_a1()
}

/// floor(T^{2/3}), guarded against rounding just below an integer.
pub fn mainterm_cutoff(t: f64) -> usize {
    let c = t.cbrt();
    (c * c + 1e-9).floor() as usize
}

/// int_T^{2T} t^{1/2} sin^2(a1/2 n^{3/2} t^{-1/2}) dt by adaptive quadrature.
pub fn mainterm_inner(n: usize, t: f64) -> f64 {
    let c = half_a1() * (n as f64).powf(1.5);
    integrate_adaptive(
        |u| {
            let s = (c / u.sqrt()).sin();
            u.sqrt() * s * s
        },
        t,
        2.0 * t,
        INNER_REL_TOL,
        0.0,
        MAX_INTERVALS,
    )
    .value
}

/// The same integral after y = a1/2 n^{3/2} t^{-1/2}:
/// 2 c^3 n^{9/2} int_{y(2T)}^{y(T)} sin^2(y) y^{-4} dy with c = a1/2.
pub fn mainterm_inner_substituted(n: usize, t: f64) -> f64 {
    let c = half_a1();
    let k = c * (n as f64).powf(1.5);
    let (y_lo, y_hi) = (k / (2.0 * t).sqrt(), k / t.sqrt());
    let value = integrate_adaptive(
        |y| {
            let s = y.sin();
            s * s / y.powi(4)
        },
        y_lo,
        y_hi,
        INNER_REL_TOL,
        0.0,
        MAX_INTERVALS,
    )
    .value;
    2.0 * k.powi(3) * value
}

/// Small-angle value of the n = 1 term: sqrt(8/pi) (a1^2 / 2)(sqrt 2 - 1) sqrt T.
pub fn mainterm_small_angle_n1(t: f64) -> f64 {
    let a1 = atkinson_a1();
    (8.0 / PI).sqrt() * 0.5 * a1 * a1 * (2f64.sqrt() - 1.0) * t.sqrt()
}

/// M(T) = sqrt(8/pi) sum_{n <= T^{2/3}} d(n)^2 n^{-3/2} int_T^{2T} t^{1/2} sin^2(...) dt,
/// the diagonal prediction for int_T^{2T} E*(t)^2 dt.
pub fn mainterm_semianalytic(t: f64, table: &DivisorTable) -> Result<MainTermEval> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::OutOfRange { what: "T", value: t, lo: 1.0, hi: f64::INFINITY });
    }
    let n_max = mainterm_cutoff(t);
    if n_max > table.limit() {
        return Err(Error::Precondition(format!(
            "divisor table limit {} is below T^(2/3) = {n_max}",
            table.limit()
        )));
    }
    let mut acc = Neumaier::default();
    for n in (1..=n_max).rev() {
        let d = f64::from(table.d(n));
        acc.add(d * d * (n as f64).powf(-1.5) * mainterm_inner(n, t));
    }
    Ok(MainTermEval { t, n_max, value: (8.0 / PI).sqrt() * acc.value() })
}

/// Leading coefficient k in int_0^T E*(t)^2 dt ~ k T^{4/3} log^3 T implied by
/// the diagonal main term, using sum_{n <= x} d(n)^2 ~ x log^3 x / pi^2.
pub fn semianalytic_leading_coefficient() -> f64 {
    let c = half_a1();
    // Inner sum over n ~ (2 / (81 pi^2)) SIN2_MOMENT c^{1/3} t^{-1/6} log^3 t,
    // integrated against sqrt(8/pi) t^{1/2} over dyadic blocks.
    0.75 * (8.0 / PI).sqrt() * 2.0 * SIN2_MOMENT / (81.0 * PI * PI) * c.cbrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_constant_by_quadrature() {
        // int_0^Y directly, then the tail (3/2) Y^{-1/3} of the mean 1/2 plus
        // an oscillatory remainder below Y^{-4/3}.
        let y_max = 2000.0 * PI;
        let head = integrate_adaptive(
            |y: f64| if y == 0.0 { 0.0 } else { y.sin().powi(2) * y.powf(-4.0 / 3.0) },
            0.0,
            y_max,
            1e-12,
            0.0,
            20_000,
        )
        .value;
        let tail = 1.5 * y_max.powf(-1.0 / 3.0);
        assert!((head + tail - SIN2_MOMENT).abs() < 1e-5, "{}", head + tail);
    }

    #[test]
    fn substitution_agrees() {
        for (n, t) in [(1usize, 1e4), (17, 1e4), (400, 1e4), (5, 3e3)] {
            let a = mainterm_inner(n, t);
            let b = mainterm_inner_substituted(n, t);
            assert!((a - b).abs() <= 1e-7 * a.abs(), "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn small_angle_regime() {
        let t: f64 = 1e7;
        assert!(atkinson_a1() / t.sqrt() < 1e-3);
        let exact = (8.0 / PI).sqrt() * mainterm_inner(1, t);
        let approx = mainterm_small_angle_n1(t);
        assert!((exact - approx).abs() <= 1e-6 * exact);
    }

    #[test]
    fn cutoff_is_exact_on_cubes() {
        assert_eq!(mainterm_cutoff(1e6), 10_000);
        assert_eq!(mainterm_cutoff(1e3), 100);
        assert_eq!(mainterm_cutoff(1e4), 464);
    }

    #[test]
    fn positive() {
        let table = DivisorTable::sieve(1000).unwrap();
        assert!(mainterm_semianalytic(500.0, &table).unwrap().value > 0.0);
    }
}
