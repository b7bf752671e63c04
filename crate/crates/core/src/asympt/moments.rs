use crate::error::{Error, Result};
use crate::meansq::Sample;
use crate::numeric::Neumaier;

/// int_0^T |E*(t)|^p dt by the trapezoid rule on the stored sample grid.
///
/// When T falls between two samples the last panel is closed with the
/// linear interpolant of E*.
pub fn moment_integral(p: f64, t: f64, samples: &[Sample]) -> Result<f64> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("moment exponent {p} must be at least 1")));
    }
    trapezoid(t, samples, |s| s.e_star.abs().powf(p))
}

/// int_0^T E(t)^2 dt by the trapezoid rule on the sample grid.
pub fn e_mean_square(t: f64, samples: &[Sample]) -> Result<f64> {
    trapezoid(t, samples, |s| s.e * s.e)
}

fn trapezoid<F: Fn(&Sample) -> f64>(t: f64, samples: &[Sample], f: F) -> Result<f64> {
    let first = samples.first().ok_or_else(|| Error::Precondition("no sweep samples available".into()))?;
    let last = samples.last().expect("nonempty");
    let tol = 1e-9 * t.abs().max(1.0);
    if first.t.abs() > tol {
        return Err(Error::Precondition(format!("samples start at t = {}, not 0", first.t)));
    }
    if t > last.t + tol || t < -tol {
        return Err(Error::Precondition(format!(
            "T = {t} lies outside the sampled range [0, {}]",
            last.t
        )));
    }
    let mut acc = Neumaier::default();
    for w in samples.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.t <= t + tol {
            acc.add(0.5 * (b.t - a.t) * (f(&a) + f(&b)));
        } else {
            if t > a.t + tol {
                let frac = (t - a.t) / (b.t - a.t);
                let mid = Sample {
                    t,
                    e: a.e + frac * (b.e - a.e),
                    e_star: a.e_star + frac * (b.e_star - a.e_star),
                };
                acc.add(0.5 * (t - a.t) * (f(&a) + f(&mid)));
            }
            break;
        }
    }
    Ok(acc.value())
}

/// Moments over a set of T values.
pub fn moment_curve(p: f64, ts: &[f64], samples: &[Sample]) -> Result<Vec<(f64, f64)>> {
    ts.iter().map(|&t| Ok((t, moment_integral(p, t, samples)?))).collect()
}
