use std::ops::{Add, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`, giving roughly 106
/// bits of significand.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    /// 2 pi to double-double precision.
    pub const TWO_PI: Self = Self {
        hi: std::f64::consts::TAU,
        lo: 2.449_293_598_294_706_4e-16,
    };

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - Self::product(q1, b);
        let q2 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::ZERO;
        }
        // One Newton step on top of the double estimate.
        let x = self.hi.sqrt();
        let (sq_hi, sq_lo) = two_prod(x, x);
        let resid = ((self.hi - sq_hi) - sq_lo + self.lo) / (2.0 * x);
        let (hi, lo) = quick_two_sum(x, resid);
        Self { hi, lo }
    }
}

impl DoubleDouble {
    pub const LN2: Self = Self {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    pub const LN_2PI: Self = Self {
        hi: 1.837_877_066_409_345_6,
        lo: -7.756_588_316_134_483e-17,
    };

    pub const PI_OVER_8: Self = Self {
        hi: std::f64::consts::FRAC_PI_8,
        lo: 1.530_808_498_934_191_5e-17,
    };

    /// exp to double-double accuracy for moderate arguments (|x| < 700).
    pub fn exp(self) -> Self {
        let k = (self.hi / Self::LN2.hi).round();
        let r = self - Self::LN2.mul_f64(k);
        // Scale by 2^-10 (exact), sum the Taylor series, then square back.
        let r = Self { hi: r.hi / 1024.0, lo: r.lo / 1024.0 };
        let mut term = Self::from_f64(1.0);
        let mut sum = Self::from_f64(1.0);
        for i in 1..=12 {
            term = (term * r).div_f64(i as f64);
            sum = sum + term;
        }
        for _ in 0..10 {
            sum = sum * sum;
        }
        let scale = 2f64.powi(k as i32);
        Self { hi: sum.hi * scale, lo: sum.lo * scale }
    }

    /// Natural logarithm by one Newton step on the double estimate.
    pub fn ln(self) -> Self {
        let y = self.hi.ln();
        let corr = self * Self::from_f64(-y).exp();
        Self::from_f64(y) + corr.add_f64(-1.0)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

/// Reduces an angle given in double-double to a double in roughly [-pi, pi].
///
/// The quotient by 2 pi is taken against the double-double value of 2 pi, so
/// the reduced angle keeps absolute accuracy near 1e-15 for |x| up to ~1e9.
pub fn reduce_angle(x: DoubleDouble) -> f64 {
    let q = (x.hi / DoubleDouble::TWO_PI.hi).round();
    if q == 0.0 {
        return x.to_f64();
    }
    let (p_hi, p_lo) = two_prod(q, DoubleDouble::TWO_PI.hi);
    let head = x.hi - p_hi;
    head + (x.lo - p_lo - q * DoubleDouble::TWO_PI.lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_and_ln_round_trip() {
        for x in [0.5, 1.0, 2.0, 10.0, 123.456, 1e7] {
            let l = DoubleDouble::from_f64(x).ln();
            let back = l.exp();
            let rel = (back - DoubleDouble::from_f64(x)).to_f64() / x;
            assert!(rel.abs() < 1e-28, "x={x} rel={rel}");
        }
        let l2 = DoubleDouble::from_f64(2.0).ln() - DoubleDouble::LN2;
        assert!(l2.to_f64().abs() < 1e-30);
        let l2pi = DoubleDouble::TWO_PI.ln() - DoubleDouble::LN_2PI;
        assert!(l2pi.to_f64().abs() < 1e-27);
    }

    #[test]
    fn division_by_double() {
        let third = DoubleDouble::from_f64(1.0).div_f64(3.0);
        let back = third.mul_f64(3.0).add_f64(-1.0);
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn product_is_exact() {
        let a = 1.0 + f64::EPSILON;
        let p = DoubleDouble::product(a, a);
        // (1 + e)^2 = 1 + 2e + e^2; the e^2 part lives in lo.
        assert_eq!(p.hi, 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(p.lo, f64::EPSILON * f64::EPSILON);
    }

    #[test]
    fn sqrt_squares_back() {
        let x = DoubleDouble::from_f64(2.0);
        let r = x.sqrt();
        let back = r * r - x;
        assert!(back.to_f64().abs() < 1e-30);
    }

    #[test]
    fn reduction_of_large_multiple() {
        // 10^6 * 2 pi + 0.5, built in double-double so the offset survives.
        let x = DoubleDouble::TWO_PI.mul_f64(1.0e6).add_f64(0.5);
        assert!((reduce_angle(x) - 0.5).abs() < 1e-12);
        let y = DoubleDouble::TWO_PI.mul_f64(-3.0e7).add_f64(-1.25);
        assert!((reduce_angle(y) + 1.25).abs() < 1e-10);
    }

    #[test]
    fn small_angles_pass_through() {
        assert_eq!(reduce_angle(DoubleDouble::from_f64(1.0)), 1.0);
    }
}
