use num_complex::Complex64;

use crate::error::{Error, Result};

/// B_2, B_4, ..., B_30.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

pub const MAX_EM_ORDER: usize = BERNOULLI.len();

/// Euler-Maclaurin evaluation of zeta(s) with `terms` explicit summands and
/// `order` Bernoulli corrections. Returns the value and the magnitude of the
/// last correction as an error estimate.
pub(super) fn zeta_em(s: Complex64, terms: usize, order: usize) -> (Complex64, f64) {
    let order = order.min(MAX_EM_ORDER);
    let big_n = terms as f64;
    let mut head = Complex64::new(0.0, 0.0);
    for n in (1..terms).rev() {
        head += n_pow_neg(n as f64, s);
    }
    let n_pow = n_pow_neg(big_n, s);
    let mut total = head + n_pow * big_n / (s - 1.0) + n_pow * 0.5;

    // term_k = B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    let mut poch = s;
    let mut fact = 2.0;
    let mut weight = n_pow / big_n;
    let mut last = 0.0;
    for k in 1..=order {
        let term = poch * weight * (BERNOULLI[k - 1] / fact);
        total += term;
        last = term.norm();
        let m = 2.0 * k as f64;
        poch *= (s + (m - 1.0)) * (s + m);
        fact *= (m + 1.0) * (m + 2.0);
        weight /= big_n * big_n;
    }
    (total, last)
}

#[inline]
fn n_pow_neg(n: f64, s: Complex64) -> Complex64 {
    let l = n.ln();
    let mag = (-s.re * l).exp();
    let (sin, cos) = (-s.im * l).sin_cos();
    Complex64::new(mag * cos, mag * sin)
}

/// Real zeta(sigma), sigma > 0 and sigma != 1, to about 1e-15 relative.
pub fn zeta_real(sigma: f64) -> Result<f64> {
    if sigma == 1.0 {
        return Err(Error::Pole);
    }
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::OutOfRange { what: "sigma", value: sigma, lo: 0.0, hi: f64::INFINITY });
    }
    let (z, _) = zeta_em(Complex64::new(sigma, 0.0), 30, MAX_EM_ORDER);
    Ok(z.re)
}
