use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geometric grid lo * 2^(k / per_octave) below hi, closed off by hi itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyadicGrid {
    pub lo: f64,
    pub hi: f64,
    pub per_octave: u32,
}

impl DyadicGrid {
    pub fn new(lo: f64, hi: f64, per_octave: u32) -> Result<Self> {
        if !(lo > 0.0 && hi >= lo && hi.is_finite()) || per_octave == 0 {
            return Err(Error::InvalidArgument(format!(
                "dyadic grid needs 0 < lo <= hi and per_octave >= 1 (got {lo}, {hi}, {per_octave})"
            )));
        }
        Ok(Self { lo, hi, per_octave })
    }

    pub fn points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            let x = self.lo * 2f64.powf(f64::from(k) / f64::from(self.per_octave));
            if x >= self.hi * (1.0 - 1e-12) {
                break;
            }
            out.push(x);
            k += 1;
        }
        out.push(self.hi);
        out
    }

    /// Grid points rounded to multiples of `step`.
    pub fn snapped(&self, step: f64) -> Vec<f64> {
        let mut pts: Vec<f64> = self.points().iter().map(|x| (x / step).round() * step).collect();
        pts.dedup();
        pts
    }
}

impl FromStr for DyadicGrid {
    type Err = Error;

    /// `dyadic:<lo>:<hi>` or `dyadic:<lo>:<hi>:<per_octave>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("grid '{s}' is not dyadic:<lo>:<hi>[:<per_octave>]"));
        let parts: Vec<&str> = s.split(':').collect();
        if parts.first() != Some(&"dyadic") || !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let lo: f64 = parts[1].parse().map_err(|_| bad())?;
        let hi: f64 = parts[2].parse().map_err(|_| bad())?;
        let per = match parts.get(3) {
            Some(p) => p.parse().map_err(|_| bad())?,
            None => 1,
        };
        DyadicGrid::new(lo, hi, per)
    }
}

impl fmt::Display for DyadicGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dyadic:{}:{}:{}", self.lo, self.hi, self.per_octave)
    }
}
