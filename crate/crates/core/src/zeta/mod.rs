//! The Riemann zeta function on the real axis and on the critical line.
//!
//! Two independent routes are provided for zeta(1/2 + it): Euler-Maclaurin
//! summation, exact up to a controllable remainder at any t but linear in
//! cost, and the Riemann-Siegel formula with tabulated remainder corrections,
//! whose main sum has only sqrt(t / 2 pi) terms. [`abs_zeta_sq`] dispatches
//! between them at a configurable cutoff.

mod em;
mod rs;
mod rs_tables;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::reduce_angle;

pub use em::{zeta_real, MAX_EM_ORDER};
pub use rs_tables::MAX_ORDER as MAX_RS_ORDER;

/// Which route produced a [`CriticalLineValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    EulerMaclaurin,
    RiemannSiegel,
}

/// zeta(1/2 + it) with provenance and an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalLineValue {
    pub t: f64,
    pub z: Complex64,
    pub method: Method,
    pub est_error: f64,
}

impl CriticalLineValue {
    pub fn abs_sq(&self) -> f64 {
        self.z.norm_sqr()
    }
}

/// Default Euler-Maclaurin correction order on the critical line.
pub const DEFAULT_EM_ORDER: usize = 12;
/// Default Riemann-Siegel correction order.
pub const DEFAULT_RS_ORDER: usize = 9;
/// Default ordinate separating the two routes.
pub const DEFAULT_RS_CUTOFF: f64 = 30.0;
/// Smallest t accepted by the Riemann-Siegel route (main sum nonempty).
pub const RS_MIN_T: f64 = 2.0 * std::f64::consts::PI;

/// Smallest admissible Euler-Maclaurin term count at ordinate t.
pub fn em_required_terms(t: f64) -> usize {
    ((2.0 * t.abs()).ceil() as usize).max(10)
}

/// Default Euler-Maclaurin term count at ordinate t.
pub fn em_default_terms(t: f64) -> usize {
    em_required_terms(t).max(20)
}

/// zeta(1/2 + it) by Euler-Maclaurin summation.
pub fn zeta_half_em(t: f64, terms: usize, correction_order: usize) -> Result<CriticalLineValue> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("t = {t} is not finite")));
    }
    let required = em_required_terms(t);
    if terms < required {
        return Err(Error::InsufficientTerms { t, required, given: terms });
    }
    if correction_order == 0 || correction_order > MAX_EM_ORDER {
        return Err(Error::OutOfRange {
            what: "correction_order",
            value: correction_order as f64,
            lo: 1.0,
            hi: MAX_EM_ORDER as f64,
        });
    }
    let (z, last) = em::zeta_em(Complex64::new(0.5, t), terms, correction_order);
    Ok(CriticalLineValue { t, z, method: Method::EulerMaclaurin, est_error: last + 4.0 * f64::EPSILON * terms as f64 })
}

/// Riemann-Siegel theta(t) for t >= 1.
///
/// Stirling expansion of arg Gamma(1/4 + it/2) with terms in t^-1, t^-3, t^-5.
/// theta is odd but only t >= 1 is served.
pub fn theta_rs(t: f64) -> Result<f64> {
    check_t("t", t, 1.0)?;
    Ok(rs::theta_dd(t).to_f64())
}

/// theta(t) reduced to roughly [-pi, pi], accurate for large t.
pub fn theta_reduced(t: f64) -> Result<f64> {
    check_t("t", t, 1.0)?;
    Ok(reduce_angle(rs::theta_dd(t)))
}

fn check_t(what: &'static str, t: f64, lo: f64) -> Result<()> {
    if t >= lo && t.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, value: t, lo, hi: f64::INFINITY })
    }
}

fn check_rs_order(order: usize) -> Result<()> {
    if order > MAX_RS_ORDER {
        return Err(Error::OutOfRange {
            what: "correction_order",
            value: order as f64,
            lo: 0.0,
            hi: MAX_RS_ORDER as f64,
        });
    }
    Ok(())
}

/// Hardy's Z(t) by Riemann-Siegel with the default cutoff.
pub fn z_function(t: f64, correction_order: usize) -> Result<f64> {
    ZetaEvaluator::default().with_rs_order(correction_order).z_function(t)
}

/// zeta(1/2 + it) by Riemann-Siegel for |t| >= 2 pi, without a cutoff check.
pub fn riemann_siegel(t: f64, correction_order: usize) -> Result<CriticalLineValue> {
    check_rs_order(correction_order)?;
    check_t("|t|", t.abs(), RS_MIN_T)?;
    let (z, err) = rs::z_rs(t.abs(), correction_order);
    let rot = Complex64::from_polar(1.0, -reduce_angle(rs::theta_dd(t.abs())));
    let mut value = rot * z;
    if t < 0.0 {
        value = value.conj();
    }
    Ok(CriticalLineValue { t, z: value, method: Method::RiemannSiegel, est_error: err })
}

/// |zeta(1/2 + it)|^2 with the default configuration.
pub fn abs_zeta_sq(t: f64) -> f64 {
    ZetaEvaluator::default().abs_zeta_sq(t)
}

/// Evaluation parameters for critical-line values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaEvaluator {
    pub rs_cutoff: f64,
    pub rs_order: usize,
    pub em_order: usize,
}

impl Default for ZetaEvaluator {
    fn default() -> Self {
        Self { rs_cutoff: DEFAULT_RS_CUTOFF, rs_order: DEFAULT_RS_ORDER, em_order: DEFAULT_EM_ORDER }
    }
}

impl ZetaEvaluator {
    pub fn new(rs_cutoff: f64, rs_order: usize, em_order: usize) -> Result<Self> {
        check_rs_order(rs_order)?;
        if !(rs_cutoff >= RS_MIN_T) || !rs_cutoff.is_finite() {
            return Err(Error::OutOfRange { what: "rs_cutoff", value: rs_cutoff, lo: RS_MIN_T, hi: f64::MAX });
        }
        if em_order == 0 || em_order > MAX_EM_ORDER {
            return Err(Error::OutOfRange {
                what: "em_order",
                value: em_order as f64,
                lo: 1.0,
                hi: MAX_EM_ORDER as f64,
            });
        }
        Ok(Self { rs_cutoff, rs_order, em_order })
    }

    pub fn with_rs_order(mut self, order: usize) -> Self {
        self.rs_order = order;
        self
    }

    /// Z(t) for t at or above the cutoff.
    pub fn z_function(&self, t: f64) -> Result<f64> {
        check_rs_order(self.rs_order)?;
        if !(t >= self.rs_cutoff) {
            return Err(Error::BelowRsCutoff { t, cutoff: self.rs_cutoff });
        }
        Ok(rs::z_rs(t, self.rs_order).0)
    }

    /// zeta(1/2 + it) from whichever route applies at |t|.
    pub fn critical_line(&self, t: f64) -> Result<CriticalLineValue> {
        if t.abs() >= self.rs_cutoff {
            riemann_siegel(t, self.rs_order)
        } else {
            zeta_half_em(t, em_default_terms(t), self.em_order)
        }
    }

    /// |zeta(1/2 + it)|^2. Total for finite t; NaN propagates.
    pub fn abs_zeta_sq(&self, t: f64) -> f64 {
        let t = t.abs();
        if t >= self.rs_cutoff && self.rs_order <= MAX_RS_ORDER {
            let z = rs::z_rs(t, self.rs_order).0;
            z * z
        } else if t.is_finite() {
            let (z, _) = em::zeta_em(Complex64::new(0.5, t), em_default_terms(t), self.em_order.clamp(1, MAX_EM_ORDER));
            z.norm_sqr()
        } else {
            f64::NAN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ZETA_HALF: f64 = -1.460_354_508_809_586_8;

    #[test]
    fn real_axis_classics() {
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_real(0.5).unwrap() - ZETA_HALF).abs() < 1e-13);
        assert_eq!(zeta_real(1.0), Err(Error::Pole));
        assert!(zeta_real(-1.0).is_err());
    }

    #[test]
    fn zeta_three_halves_bracket() {
        // sum_{n<N} n^{-3/2} + int_N^inf lies above; + N^{-3/2} shifts below.
        let n = 100_000usize;
        let partial: f64 = (1..n).map(|k| (k as f64).powf(-1.5)).sum();
        let upper = partial + 2.0 / (n as f64).sqrt() + (n as f64).powf(-1.5);
        let lower = partial + 2.0 / (n as f64).sqrt();
        let z = zeta_real(1.5).unwrap();
        assert!(lower < z && z < upper);
        assert!((z - 2.612_375_348_685_488).abs() < 1e-13);
    }

    #[test]
    fn em_at_zero_is_real_and_stable() {
        let a = zeta_half_em(0.0, 20, 12).unwrap();
        let b = zeta_half_em(0.0, 40, 15).unwrap();
        assert!((a.z.re - ZETA_HALF).abs() < 1e-12);
        assert!(a.z.im.abs() < 1e-15);
        assert!((a.z - b.z).norm() < 1e-10);
    }

    #[test]
    fn em_rejects_short_sums() {
        match zeta_half_em(50.0, 40, 12) {
            Err(Error::InsufficientTerms { required, .. }) => assert_eq!(required, 100),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn em_reflection() {
        for t in [3.0, 17.5, 44.0] {
            let up = zeta_half_em(t, em_default_terms(t), 12).unwrap().z;
            let down = zeta_half_em(-t, em_default_terms(t), 12).unwrap().z;
            assert!((up - down.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn em_matches_rs_at_fifty() {
        let em = zeta_half_em(50.0, 100, 12).unwrap();
        let rs = riemann_siegel(50.0, DEFAULT_RS_ORDER).unwrap();
        assert!((em.z - rs.z).norm() < 1e-6, "{:?} vs {:?}", em.z, rs.z);
    }

    #[test]
    fn rotated_em_value_is_real() {
        for t in [10.0, 30.0, 77.7, 150.0] {
            let em = zeta_half_em(t, em_default_terms(t), 12).unwrap();
            let z = Complex64::from_polar(1.0, theta_reduced(t).unwrap()) * em.z;
            assert!(z.im.abs() < 1e-10, "t={t} im={}", z.im);
        }
    }

    #[test]
    fn theta_derivative() {
        let t = 100.0;
        let h = 1e-4;
        let fd = (theta_rs(t + h).unwrap() - theta_rs(t - h).unwrap()) / (2.0 * h);
        let leading = 0.5 * (t / (2.0 * PI)).ln();
        // theta' = log(t / 2 pi) / 2 - 1 / (48 t^2) + O(t^-4).
        assert!((fd - (leading - 1.0 / (48.0 * t * t))).abs() < 1e-9);
        assert!((fd - leading).abs() < 3e-6);
        assert!(theta_rs(0.5).is_err());
    }

    #[test]
    fn theta_matches_reference() {
        // theta(100) from a 50-digit evaluation of arg Gamma(1/4 + 50i).
        assert!((theta_rs(100.0).unwrap() - 87.972_165_231_787_22).abs() < 1e-9);
    }

    #[test]
    fn first_zero_sign_change() {
        let ev = ZetaEvaluator { rs_cutoff: 10.0, ..ZetaEvaluator::default() };
        let (mut lo, mut hi) = (14.0, 14.2);
        let f = |t: f64| ev.z_function(t).unwrap();
        assert!(f(lo) * f(hi) < 0.0);
        for _ in 0..50 {
            let mid = 0.5 * (lo + hi);
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 14.134_725_141_734_693).abs() < 1e-6, "{root}");
        let em = zeta_half_em(root, 40, 12).unwrap();
        assert!(em.z.norm() < 1e-6);
    }

    #[test]
    fn z_below_cutoff_is_rejected() {
        assert!(matches!(z_function(20.0, 2), Err(Error::BelowRsCutoff { .. })));
        assert!(z_function(40.0, MAX_RS_ORDER + 1).is_err());
    }

    #[test]
    fn abs_zeta_sq_at_zero() {
        assert!((abs_zeta_sq(0.0) - ZETA_HALF * ZETA_HALF).abs() < 1e-12);
        assert!((abs_zeta_sq(0.0) - 2.1326).abs() < 1e-4);
    }

    #[test]
    fn continuity_across_cutoff() {
        let c = DEFAULT_RS_CUTOFF;
        let h = 1e-3;
        for t in [c - h, c, c + h] {
            let em = zeta_half_em(t, em_default_terms(t), DEFAULT_EM_ORDER).unwrap().abs_sq();
            let rs = riemann_siegel(t, DEFAULT_RS_ORDER).unwrap().abs_sq();
            assert!((em - rs).abs() < 1e-9, "t={t}");
        }
        // The dispatched value has no jump beyond its own slope across the cutoff.
        let below = abs_zeta_sq(c - h);
        let above = abs_zeta_sq(c + h);
        let slope = (abs_zeta_sq(c + 2.0 * h) - abs_zeta_sq(c - 2.0 * h)) / (4.0 * h);
        assert!((above - below - 2.0 * h * slope).abs() < 1e-4);
    }

    #[test]
    fn theta_is_increasing_past_ten() {
        let mut prev = theta_rs(10.0).unwrap();
        for i in 1..=1000 {
            let t = 10.0 + i as f64 * 0.5;
            let v = theta_rs(t).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn dual_route_agreement_grid() {
        for k in 1..=20 {
            let t = 10.0 * k as f64;
            let em = zeta_half_em(t, em_default_terms(t), DEFAULT_EM_ORDER).unwrap();
            let rs = riemann_siegel(t, DEFAULT_RS_ORDER).unwrap();
            assert!((em.z - rs.z).norm() < 1e-6, "t={t}: {}", (em.z - rs.z).norm());
        }
    }

    #[test]
    fn large_t_phase_stays_accurate() {
        // Z near the 10^7 range: dd phases keep the two neighbouring orders consistent.
        let t = 1.0e7 + 0.123;
        let a = rs::z_rs(t, 4).0;
        let b = rs::z_rs(t, 9).0;
        assert!((a - b).abs() < 1e-10);
        // 30-digit reference value of Z(t).
        assert!((b - 6.991_389_024_149_051).abs() < 1e-8, "{b}");
    }
}
