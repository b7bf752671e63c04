use estar::asympt::*;
use estar::constants::constants;
use estar::divisor::DivisorTable;
use estar::meansq::{run_sweep_with, Sample, SweepConfig, SweepOptions};
use proptest::prelude::*;

fn scales() -> Vec<f64> {
    DyadicGrid::new(1e3, 1e6, 2).unwrap().points()
}

fn cubic(c: [f64; 4], l: f64) -> f64 {
    ((c[0] * l + c[1]) * l + c[2]) * l + c[3]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_cubic_is_recovered(
        c3 in 0.1f64..5.0, c2 in -5.0f64..5.0, c1 in -5.0f64..5.0, c0 in -5.0f64..5.0,
        beta in 1.0f64..1.7,
    ) {
        let c = [c3, c2, c1, c0];
        let pts: Vec<(f64, f64)> = scales().iter().map(|&s| (s, s.powf(beta) * cubic(c, s.ln()))).collect();
        let fit = fit_log_cubic(&pts, beta).unwrap();
        for (got, want) in fit.coeffs.iter().zip(c) {
            prop_assert!((got - want).abs() <= 1e-6 * (1.0 + want.abs()), "{:?}", fit.coeffs);
        }
        prop_assert!(fit.residual_rms <= 1e-6);
    }

    #[test]
    fn fit_is_linear_in_values(lambda in 0.01f64..100.0, seed in 0u64..1000) {
        let pts: Vec<(f64, f64)> = scales()
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, s * (1.0 + 0.1 * (((i as u64 + seed) * 7919 % 13) as f64))))
            .collect();
        let scaled: Vec<(f64, f64)> = pts.iter().map(|&(s, v)| (s, lambda * v)).collect();
        let a = fit_log_cubic(&pts, 4.0 / 3.0).unwrap();
        let b = fit_log_cubic(&scaled, 4.0 / 3.0).unwrap();
        for (x, y) in a.coeffs.iter().zip(b.coeffs) {
            prop_assert!((lambda * x - y).abs() <= 1e-8 * (1.0 + y.abs()));
        }
        prop_assert!((a.relative_rms - b.relative_rms).abs() <= 1e-9);
        prop_assert!((a.condition - b.condition).abs() <= 1e-6 * a.condition);
    }
}

#[test]
fn short_span_is_rejected() {
    let pts: Vec<(f64, f64)> = (0..10).map(|i| (1000.0 + i as f64, 1.0)).collect();
    assert!(matches!(fit_log_cubic(&pts, 1.0), Err(estar::Error::Precondition(_))));
}

fn short_samples() -> (Vec<Sample>, DivisorTable) {
    let table = DivisorTable::sieve(2000).unwrap();
    let config = SweepConfig::default().with_t_max(3000.0);
    let out = run_sweep_with(&config, &table, SweepOptions { keep_samples: true, resume: None }, |_| {}).unwrap();
    (out.samples.unwrap(), table)
}

#[test]
fn moments_are_monotone_in_t_and_ordered_in_p() {
    let (samples, _) = short_samples();
    let ts: Vec<f64> = (1..=30).map(|k| 100.0 * k as f64).collect();
    for p in [1.0, 2.0, 4.0, 5.0] {
        let curve = moment_curve(p, &ts, &samples).unwrap();
        assert!(curve.windows(2).all(|w| w[1].1 >= w[0].1), "p = {p}");
    }
    assert_eq!(moment_integral(2.0, 0.0, &samples).unwrap(), 0.0);
    assert!(moment_integral(0.5, 10.0, &samples).is_err());
    assert!(moment_integral(2.0, 3001.0, &samples).is_err());
}

#[test]
fn interpolated_endpoint_is_continuous() {
    let (samples, _) = short_samples();
    let a = moment_integral(2.0, 1000.0, &samples).unwrap();
    let b = moment_integral(2.0, 1000.0 + 1e-7, &samples).unwrap();
    let c = moment_integral(2.0, 1000.025, &samples).unwrap();
    assert!((b - a).abs() < 1e-3);
    assert!(c >= a);
}

#[test]
fn report_on_short_sweep() {
    let (samples, table) = short_samples();
    let grid = DyadicGrid::new(300.0, 3000.0, 4).unwrap().snapped(0.05);
    let report = ratio_report(&grid, &samples, &table, &constants().unwrap()).unwrap();
    assert_eq!(report.rows.len(), grid.len());
    assert!(report.rows.iter().all(|r| r.ratio_14 > 0.0 && r.i_star > 0.0));
    assert!(report.fit.is_some());
    let beta = report.free_exponent.unwrap();
    assert!((FREE_EXPONENT_RANGE.0..=FREE_EXPONENT_RANGE.1).contains(&beta));
    let min = report.rows.iter().map(|r| r.ratio_14).fold(f64::INFINITY, f64::min);
    assert_eq!(report.lower_bound_constant, Some(min));

    let empty = ratio_report(&[], &samples, &table, &constants().unwrap()).unwrap();
    assert!(empty.rows.is_empty() && empty.fit.is_none() && empty.lower_bound_constant.is_none());
}

#[test]
fn lemma3_rejects_small_a() {
    let table = DivisorTable::sieve(100).unwrap();
    assert!(lemma3_check(&[10.0, 20.0], -0.5, &table).is_err());
}
