//! Truncated Voronoi series for Delta*(x) and its empirical error profile.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::divisor::{delta_star_direct, DivisorTable};
use crate::error::{check_range, Error, Result};
use crate::numeric::{reduce_angle, DoubleDouble, Neumaier};

/// Exponent slack in the reference bound x^{1/2 + eps} N^{-1/2}.
pub const BOUND_EPSILON: f64 = 0.1;

/// Above this value of n x the phases are formed in double-double.
const DD_PHASE_THRESHOLD: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoronoiEval {
    pub x: f64,
    pub n: usize,
    pub value: f64,
    /// x^{1/2 + eps} N^{-1/2} at [`BOUND_EPSILON`]; infinite for N = 0.
    pub error_bound: f64,
}

/// 4 pi sqrt(n x) - pi/4 reduced to roughly [-pi, pi] when n x is large.
pub fn voronoi_phase(n: usize, x: f64) -> f64 {
    let nx = n as f64 * x;
    if nx > DD_PHASE_THRESHOLD {
        let root = DoubleDouble::product(n as f64, x).sqrt();
        let four_pi = DoubleDouble::TWO_PI.mul_f64(2.0);
        reduce_angle(four_pi * root) - FRAC_PI_4
    } else {
        4.0 * PI * nx.sqrt() - FRAC_PI_4
    }
}

pub fn reference_bound(x: f64, n: usize) -> f64 {
    if n == 0 {
        f64::INFINITY
    } else {
        x.powf(0.5 + BOUND_EPSILON) / (n as f64).sqrt()
    }
}

/// (pi sqrt 2)^{-1} x^{1/4} sum_{n <= N} (-1)^n d(n) n^{-3/4} cos(4 pi sqrt(n x) - pi/4).
pub fn delta_star_voronoi(x: f64, n: usize, table: &DivisorTable) -> Result<VoronoiEval> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::OutOfRange { what: "x", value: x, lo: 0.0, hi: f64::INFINITY });
    }
    if n > table.limit() {
        return Err(Error::OutOfRange { what: "N", value: n as f64, lo: 0.0, hi: table.limit() as f64 });
    }
    let mut acc = Neumaier::default();
    for k in 1..=n {
        acc.add(table.signed_d(k) * (k as f64).powf(-0.75) * voronoi_phase(k, x).cos());
    }
    let value = if n == 0 { 0.0 } else { x.powf(0.25) / (PI * SQRT_2) * acc.value() };
    Ok(VoronoiEval { x, n, value, error_bound: reference_bound(x, n) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub x: f64,
    pub n: usize,
    pub deviation: f64,
    pub bound: f64,
}

/// One row per grid point: |voronoi - exact| against the reference bound.
pub fn voronoi_error_profile<F>(x_grid: &[f64], n_rule: F, table: &DivisorTable) -> Result<Vec<ProfileRow>>
where
    F: Fn(f64) -> usize,
{
    x_grid
        .iter()
        .map(|&x| {
            check_range("4x", 4.0 * x, 0.0, table.limit() as f64)?;
            let n = n_rule(x);
            let v = delta_star_voronoi(x, n, table)?;
            let exact = delta_star_direct(x, table)?;
            Ok(ProfileRow { x, n, deviation: (v.value - exact).abs(), bound: v.error_bound })
        })
        .collect()
}

/// `count` points x0 + u with u uniform in [0, 1), from a seeded stream.
pub fn jittered_points(x0: f64, count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| x0 + rng.gen::<f64>()).collect()
}

/// Median of |voronoi - exact| over the given points at truncation N.
pub fn median_deviation(points: &[f64], n: usize, table: &DivisorTable) -> Result<f64> {
    let rows = voronoi_error_profile(points, |_| n, table)?;
    let mut devs: Vec<f64> = rows.iter().map(|r| r.deviation).collect();
    if devs.is_empty() {
        return Err(Error::InvalidArgument("no sample points".into()));
    }
    devs.sort_by(f64::total_cmp);
    let m = devs.len();
    Ok(if m % 2 == 1 { devs[m / 2] } else { 0.5 * (devs[m / 2 - 1] + devs[m / 2]) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sum_is_zero() {
        let t = DivisorTable::sieve(10).unwrap();
        let v = delta_star_voronoi(123.4, 0, &t).unwrap();
        assert_eq!(v.value, 0.0);
        assert!(v.error_bound.is_infinite());
    }

    #[test]
    fn single_term_at_cosine_zero() {
        let t = DivisorTable::sieve(10).unwrap();
        let v = delta_star_voronoi(9.0 / 256.0, 1, &t).unwrap();
        assert!(v.value.abs() < 1e-16);
    }

    #[test]
    fn truncation_beyond_table_is_rejected() {
        let t = DivisorTable::sieve(10).unwrap();
        assert!(matches!(delta_star_voronoi(100.0, 11, &t), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn moderate_x_tracks_exact_value() {
        let t = DivisorTable::sieve(4000).unwrap();
        let x = 1000.0;
        let v = delta_star_voronoi(x, 1000, &t).unwrap();
        let exact = delta_star_direct(x, &t).unwrap();
        assert!((v.value - exact).abs() <= 100.0 * reference_bound(x, 1000));
    }

    #[test]
    fn dd_and_double_phase_agree_at_threshold() {
        let (n, x) = (1000usize, 1.0e9 + 0.37);
        let dd = voronoi_phase(n, x);
        let plain = 4.0 * PI * (n as f64 * x).sqrt() - FRAC_PI_4;
        let diff = (dd - plain).rem_euclid(2.0 * PI);
        let diff = diff.min(2.0 * PI - diff);
        assert!(diff < 1e-6);
    }

    #[test]
    fn profile_rows_are_finite() {
        let t = DivisorTable::sieve(40_000).unwrap();
        let rows = voronoi_error_profile(&[1e2, 1e3, 1e4], |x| x as usize, &t).unwrap();
        assert_eq!(rows.len(), 3);
        for r in rows {
            assert!(r.deviation.is_finite());
            assert!(r.deviation <= 100.0 * r.bound, "{r:?}");
        }
    }

    #[test]
    fn jitter_is_reproducible() {
        assert_eq!(jittered_points(5.0, 4, 7), jittered_points(5.0, 4, 7));
        assert!(jittered_points(5.0, 100, 1).iter().all(|&x| (5.0..6.0).contains(&x)));
    }
}
