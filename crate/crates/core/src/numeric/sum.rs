use serde::{Deserialize, Serialize};

use super::DoubleDouble;

/// Kahan-Babuska-Neumaier running sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new(init: f64) -> Self {
        Self { sum: init, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Arithmetic used by the long-running accumulators of a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrecisionMode {
    /// Compensated double accumulation.
    #[default]
    Double,
    /// Double-double accumulation.
    DoubleDouble,
}

impl PrecisionMode {
    pub fn label(self) -> &'static str {
        match self {
            PrecisionMode::Double => "double",
            PrecisionMode::DoubleDouble => "dd",
        }
    }
}

impl std::str::FromStr for PrecisionMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "double" => Ok(PrecisionMode::Double),
            "dd" | "double-double" => Ok(PrecisionMode::DoubleDouble),
            other => Err(format!("unknown precision mode '{other}' (expected double|dd)")),
        }
    }
}

/// Running sum whose arithmetic is selected by [`PrecisionMode`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Accumulator {
    Compensated(Neumaier),
    Wide(DoubleDouble),
}

impl Accumulator {
    pub fn new(mode: PrecisionMode, init: f64) -> Self {
        match mode {
            PrecisionMode::Double => Accumulator::Compensated(Neumaier::new(init)),
            PrecisionMode::DoubleDouble => Accumulator::Wide(DoubleDouble::from_f64(init)),
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        match self {
            Accumulator::Compensated(s) => s.add(x),
            Accumulator::Wide(s) => *s = s.add_f64(x),
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        match self {
            Accumulator::Compensated(s) => s.value(),
            Accumulator::Wide(s) => s.to_f64(),
        }
    }

    /// Collapses a compensated sum to its rounded value, so that the state
    /// is fully described by one double. Double-double sums are untouched.
    pub fn fold(&mut self) {
        if let Accumulator::Compensated(s) = self {
            *s = Neumaier::new(s.value());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_recovers_small_terms() {
        let mut s = Neumaier::default();
        s.add(1e16);
        for _ in 0..10 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 10.0);
    }

    #[test]
    fn accumulators_agree_on_harmonic_sum() {
        let mut a = Accumulator::new(PrecisionMode::Double, 0.0);
        let mut b = Accumulator::new(PrecisionMode::DoubleDouble, 0.0);
        for n in 1..100_000 {
            let x = 1.0 / n as f64;
            a.add(x);
            b.add(x);
        }
        assert!((a.value() - b.value()).abs() < 1e-14);
    }

    #[test]
    fn fold_keeps_value() {
        let mut a = Accumulator::new(PrecisionMode::Double, 0.0);
        for n in 1..1000 {
            a.add(0.1 * n as f64);
        }
        let v = a.value();
        a.fold();
        assert_eq!(a.value(), v);
    }

    #[test]
    fn precision_mode_parses() {
        assert_eq!("dd".parse::<PrecisionMode>().unwrap(), PrecisionMode::DoubleDouble);
        assert_eq!("double".parse::<PrecisionMode>().unwrap(), PrecisionMode::Double);
        assert!("quad".parse::<PrecisionMode>().is_err());
    }
}
