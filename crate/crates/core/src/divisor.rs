//! Divisor-function machinery: the d(n) sieve, the error terms Delta(x) and
//! Delta*(x), and d(n)^2-weighted partial sums.

use crate::constants::{EULER_GAMMA, STIELTJES, ZETA_2_DERIVATIVES};
use crate::error::{check_range, Error, Result};
use crate::numeric::{DoubleDouble, GaussLegendre, Neumaier};
use crate::zeta::zeta_real;

/// d(n) for 1 <= n <= limit together with running sums of d(n) and (-1)^n d(n).
///
/// Index 0 of every array is the empty-sum slot, so `prefix[x]` is
/// `sum_{n <= x} d(n)` for integer x.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorTable {
    limit: usize,
    counts: Vec<u32>,
    prefix: Vec<u64>,
    alt_prefix: Vec<i64>,
}

fn alloc<T: Clone>(len: usize, fill: T, what: &str) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::Resource(format!("{what} of {len} entries")))?;
    v.resize(len, fill);
    Ok(v)
}

impl DivisorTable {
    /// Incremental divisor-count sieve, O(limit log limit) additions.
    pub fn sieve(limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidArgument("sieve limit must be at least 1".into()));
        }
        let mut counts = alloc(limit + 1, 0u32, "divisor counts")?;
        for d in 1..=limit {
            for m in (d..=limit).step_by(d) {
                counts[m] += 1;
            }
        }
        let mut prefix = alloc(limit + 1, 0u64, "divisor prefix sums")?;
        let mut alt_prefix = alloc(limit + 1, 0i64, "alternating prefix sums")?;
        for n in 1..=limit {
            let d = u64::from(counts[n]);
            prefix[n] = prefix[n - 1]
                .checked_add(d)
                .ok_or_else(|| Error::Resource("divisor prefix sum overflows u64".into()))?;
            let signed = if n % 2 == 0 { d as i64 } else { -(d as i64) };
            alt_prefix[n] = alt_prefix[n - 1] + signed;
        }
        Ok(Self { limit, counts, prefix, alt_prefix })
    }

    /// Builds a table from explicit counts (index 0 is ignored). Used to
    /// exercise the evaluators on synthetic weights.
    pub fn from_counts(counts: Vec<u32>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidArgument("need counts for at least n = 1".into()));
        }
        let limit = counts.len() - 1;
        let mut prefix = vec![0u64; limit + 1];
        let mut alt_prefix = vec![0i64; limit + 1];
        for n in 1..=limit {
            let d = u64::from(counts[n]);
            prefix[n] = prefix[n - 1] + d;
            alt_prefix[n] = alt_prefix[n - 1] + if n % 2 == 0 { d as i64 } else { -(d as i64) };
        }
        Ok(Self { limit, counts, prefix, alt_prefix })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// d(n). Panics if n is 0 or beyond the limit.
    #[inline]
    pub fn d(&self, n: usize) -> u32 {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside 1..={}", self.limit);
        self.counts[n]
    }

    /// `(-1)^n d(n)` as a float.
    #[inline]
    pub fn signed_d(&self, n: usize) -> f64 {
        let d = f64::from(self.d(n));
        if n.is_multiple_of(2) {
            d
        } else {
            -d
        }
    }

    /// `sum_{k <= n} d(k)`, with `prefix(0) = 0`.
    #[inline]
    pub fn prefix(&self, n: usize) -> u64 {
        self.prefix[n]
    }

    /// `sum_{k <= n} (-1)^k d(k)`, with `alt_prefix(0) = 0`.
    #[inline]
    pub fn alt_prefix(&self, n: usize) -> i64 {
        self.alt_prefix[n]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts[1..]
    }
}

/// x (log x + 2 gamma - 1), the main term of the divisor problem; 0 at x = 0.
#[inline]
pub fn divisor_main_term(x: f64) -> f64 {
    main_term_dd(x).to_f64()
}

/// 2 gamma - 1 to double-double precision.
const TWO_GAMMA_MINUS_ONE: DoubleDouble = DoubleDouble::new(2.0 * EULER_GAMMA - 1.0, -9.885_830_304_861_29e-18);

/// The main term in double-double, so that the cancellation in Delta and in
/// the three-term combination for Delta* costs nothing at double precision.
fn main_term_dd(x: f64) -> DoubleDouble {
    if x == 0.0 {
        DoubleDouble::ZERO
    } else {
        (DoubleDouble::from_f64(x).ln() + TWO_GAMMA_MINUS_ONE).mul_f64(x)
    }
}

fn floor_index(x: f64) -> usize {
    x.floor() as usize
}

/// Delta(x) = sum_{n <= x} d(n) - x (log x + 2 gamma - 1), n = x included.
pub fn delta(x: f64, table: &DivisorTable) -> Result<f64> {
    check_range("x", x, 1.0, table.limit as f64)?;
    Ok((-main_term_dd(x)).add_f64(table.prefix(floor_index(x)) as f64).to_f64())
}

/// Delta*(x) = (1/2) sum_{n <= 4x} (-1)^n d(n) - x (log x + 2 gamma - 1).
///
/// For x < 1/4 the sum is empty and only the main term remains.
pub fn delta_star_direct(x: f64, table: &DivisorTable) -> Result<f64> {
    check_range("x", x, 0.0, table.limit as f64 / 4.0)?;
    let n = floor_index(4.0 * x);
    Ok((-main_term_dd(x)).add_f64(0.5 * table.alt_prefix(n) as f64).to_f64())
}

/// Delta*(x) as the combination -Delta(x) + 2 Delta(2x) - Delta(4x) / 2.
pub fn delta_star_combination(x: f64, table: &DivisorTable) -> Result<f64> {
    check_range("x", x, 1.0, table.limit as f64 / 4.0)?;
    Ok(-delta(x, table)? + 2.0 * delta(2.0 * x, table)? - 0.5 * delta(4.0 * x, table)?)
}

/// Exact `sum_{n <= x} d(n)^2 n^a`, accumulated from the largest n down.
pub fn d2_weighted_sum(x: f64, a: f64, table: &DivisorTable) -> Result<f64> {
    check_range("x", x, 0.0, table.limit as f64)?;
    let top = floor_index(x);
    let mut acc = Neumaier::default();
    for n in (1..=top).rev() {
        let d = f64::from(table.d(n));
        acc.add(d * d * (n as f64).powf(a));
    }
    Ok(acc.value())
}

/// `int_0^x Delta*(y)^2 dy`, integrated piecewise between the jump points
/// k/4 where Delta* is smooth.
pub fn delta_star_mean_square(x: f64, table: &DivisorTable) -> Result<f64> {
    check_range("x", x, 0.0, table.limit as f64 / 4.0)?;
    let rule = GaussLegendre::new(8);
    let pieces = floor_index(4.0 * x);
    let mut acc = Neumaier::default();
    let piece = |k: usize, lo: f64, hi: f64| {
        let half_sum = 0.5 * table.alt_prefix(k) as f64;
        rule.integrate(lo, hi, |y| {
            let v = half_sum - divisor_main_term(y);
            v * v
        })
    };
    for k in 0..pieces {
        acc.add(piece(k, k as f64 / 4.0, (k + 1) as f64 / 4.0));
    }
    let start = pieces as f64 / 4.0;
    if x > start {
        acc.add(piece(pieces, start, x));
    }
    Ok(acc.value())
}

/// Coefficients `[c0, c1, c2, c3]` with `sum_{n <= x} d(n)^2 = x sum_k c_k (log x)^k
/// + O(x^{1/2 + eps})`, from the residue of zeta(s)^4 x^s / (s zeta(2s)) at s = 1.
pub fn d2_summatory_coefficients() -> [f64; 4] {
    // (s - 1) zeta(s) = 1 + sum_n (-1)^n gamma_n / n! u^{n+1}, u = s - 1.
    let laurent = [
        1.0,
        EULER_GAMMA,
        -STIELTJES[0],
        STIELTJES[1] / 2.0,
    ];
    let mul = |a: &[f64; 4], b: &[f64; 4]| {
        let mut out = [0.0; 4];
        for i in 0..4 {
            for j in 0..4 - i {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    };
    let sq = mul(&laurent, &laurent);
    let fourth = mul(&sq, &sq);
    // zeta(2 + 2u) = sum_k zeta^(k)(2) 2^k u^k / k!, then its reciprocal.
    let mut z2 = [0.0; 4];
    let mut fact = 1.0;
    for (k, slot) in z2.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        *slot = ZETA_2_DERIVATIVES[k] * 2f64.powi(k as i32) / fact;
    }
    let mut inv = [0.0; 4];
    inv[0] = 1.0 / z2[0];
    for k in 1..4 {
        let s: f64 = (1..=k).map(|j| z2[j] * inv[k - j]).sum();
        inv[k] = -s / z2[0];
    }
    // 1 / s = 1 / (1 + u).
    let geometric = [1.0, -1.0, 1.0, -1.0];
    let g = mul(&mul(&fourth, &inv), &geometric);
    // x^s = x e^{u log x}: the u^3 coefficient of the product gives the residue.
    [g[3], g[2], g[1] / 2.0, g[0] / 6.0]
}

/// `int_N^inf (log u + shift)^k u^{-3/2} du` for k = 0..=3.
fn log_power_tails(n: f64, shift: f64) -> [f64; 4] {
    let l = n.ln() + shift;
    let r = 2.0 / n.sqrt();
    let mut out = [r; 4];
    for k in 1..4 {
        out[k] = r * l.powi(k as i32) + 2.0 * k as f64 * out[k - 1];
    }
    out
}

/// Cutoff used for the partial-sum route of [`d2_zeta_constant`].
pub const D2_SERIES_CUTOFF: usize = 1_000_000;

/// `sum_{n >= 1} d(n)^2 n^{-3/2}` by two routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct D2SeriesConstant {
    /// zeta(3/2)^4 / zeta(3).
    pub value: f64,
    pub cutoff: usize,
    /// `sum_{n <= cutoff}`, a strict lower bound.
    pub partial_sum: f64,
    /// Partial sum plus the asymptotic tail from the exact main term.
    pub tail_estimate: f64,
    /// Partial sum plus an elementary upper bound for the tail.
    pub upper_bound: f64,
}

/// Computes `sum d(n)^2 n^{-3/2} = zeta(3/2)^4 / zeta(3)` in closed form and
/// certifies it against the partial sum to [`D2_SERIES_CUTOFF`].
///
/// The closed form must lie in `[partial, partial + tail bound]`, where the
/// bound uses d(n)^2 <= d_4(n) and `sum_{n <= x} d_4(n) <= x (1 + log x)^3`.
/// The partial sum plus the asymptotic tail must then agree with the closed
/// form to `tolerance`.
pub fn d2_zeta_constant(tolerance: f64) -> Result<D2SeriesConstant> {
    if !(tolerance >= 1e-12) {
        return Err(Error::InvalidArgument(format!("tolerance {tolerance} below 1e-12")));
    }
    let z32 = zeta_real(1.5)?;
    let value = z32.powi(4) / zeta_real(3.0)?;

    let n = D2_SERIES_CUTOFF;
    let table = DivisorTable::sieve(n)?;
    let partial_sum = d2_weighted_sum(n as f64, -1.5, &table)?;
    let nf = n as f64;

    let coeffs = d2_summatory_coefficients();
    let tails = log_power_tails(nf, 0.0);
    let summatory: f64 = (1..=n).map(|k| f64::from(table.d(k)).powi(2)).sum();
    // Partial summation against S(u) ~ u P(log u) beyond the cutoff.
    let asymptotic_tail = -summatory * nf.powf(-1.5)
        + 1.5 * coeffs.iter().zip(&tails).map(|(c, i)| c * i).sum::<f64>();
    let tail_estimate = partial_sum + asymptotic_tail;

    let upper_tail = 1.5 * log_power_tails(nf, 1.0)[3];
    let upper_bound = partial_sum + upper_tail;

    if !(partial_sum < value && value <= upper_bound) {
        return Err(Error::Consistency(format!(
            "closed form {value} outside the bracket [{partial_sum}, {upper_bound}]"
        )));
    }
    if (tail_estimate - value).abs() > tolerance {
        return Err(Error::Consistency(format!(
            "closed form {value} and tail estimate {tail_estimate} differ by more than {tolerance}"
        )));
    }
    Ok(D2SeriesConstant { value, cutoff: n, partial_sum, tail_estimate, upper_bound })
}
