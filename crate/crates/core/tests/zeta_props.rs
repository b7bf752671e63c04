use estar::zeta::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn z_squared_matches_em_modulus() {
    let ev = ZetaEvaluator::default();
    for i in 0..=170 {
        let t = 30.0 + i as f64;
        let z = ev.z_function(t).unwrap();
        let em = zeta_half_em(t, em_default_terms(t), DEFAULT_EM_ORDER).unwrap();
        assert!((z * z - em.abs_sq()).abs() < 1e-6, "t = {t}");
    }
}

#[test]
fn low_orders_improve_on_median() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let ts: Vec<f64> = (0..64).map(|_| 50.0 + rng.gen::<f64>()).collect();
    let median = |order: usize| {
        let mut d: Vec<f64> = ts
            .iter()
            .map(|&t| {
                let em = zeta_half_em(t, em_default_terms(t), DEFAULT_EM_ORDER).unwrap();
                let z_em = (num_complex::Complex64::from_polar(1.0, theta_rs(t).unwrap()) * em.z).re;
                (z_function(t, order).unwrap() - z_em).abs()
            })
            .collect();
        d.sort_by(f64::total_cmp);
        0.5 * (d[31] + d[32])
    };
    let (m0, m1, m2) = (median(0), median(1), median(2));
    assert!(m0 > m1 && m1 > m2, "{m0} {m1} {m2}");
}

#[test]
fn nonnegative_on_random_ordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100_000 {
        let t = rng.gen::<f64>() * 5e4;
        let v = abs_zeta_sq(t);
        assert!(v >= 0.0 && v.is_finite(), "t = {t}");
    }
}

#[test]
fn em_value_at_two_term_counts() {
    let a = zeta_half_em(0.0, 20, 12).unwrap();
    let b = zeta_half_em(0.0, 60, 8).unwrap();
    assert!((a.z - b.z).norm() < 1e-10);
    assert!((a.z.re + 1.460_354_5).abs() < 1e-7);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reflection_of_modulus(t in 0.0f64..1e4) {
        let ev = ZetaEvaluator::default();
        let up = ev.critical_line(t).unwrap().abs_sq();
        let down = ev.critical_line(-t).unwrap().abs_sq();
        prop_assert!((up - down).abs() <= 1e-12 * up.max(1.0));
    }

    #[test]
    fn reflection_is_conjugation(t in 1.0f64..200.0) {
        let up = zeta_half_em(t, em_default_terms(t), 12).unwrap().z;
        let down = zeta_half_em(-t, em_default_terms(t), 12).unwrap().z;
        prop_assert!((up - down.conj()).norm() <= 1e-12);
    }
}
