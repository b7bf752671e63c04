//! Numerical constants and the cached registry of derived mean-square
//! constants.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::divisor::d2_zeta_constant;
use crate::error::Result;
use crate::zeta::zeta_real;

/// Euler's constant.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// Stieltjes constants gamma_1, gamma_2, gamma_3 (gamma_0 is Euler's constant).
#[allow(clippy::excessive_precision)]
pub(crate) const STIELTJES: [f64; 3] = [
    -0.072_815_845_483_676_724_860_586_375_874_9,
    -0.009_690_363_192_872_318_484_530_386_035_21,
    0.002_053_834_420_303_345_866_160_046_542_75,
];

/// zeta(2), zeta'(2), zeta''(2), zeta'''(2).
#[allow(clippy::excessive_precision)]
pub(crate) const ZETA_2_DERIVATIVES: [f64; 4] = [
    1.644_934_066_848_226_436_472_415_166_645_95,
    -0.937_548_254_315_843_753_702_574_094_567_85,
    1.989_280_234_298_901_023_420_858_687_421_43,
    -6.000_145_802_843_044_865_643_941_217_537_75,
];

/// Tolerance used when the registry certifies the series constant.
pub const REGISTRY_TOLERANCE: f64 = 1e-6;

/// Constants appearing in the mean-square laws for Delta, Delta* and E.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantsRegistry {
    pub gamma: f64,
    pub zeta2: f64,
    pub zeta3: f64,
    pub zeta32: f64,
    /// sum_{n >= 1} d(n)^2 n^{-3/2} = zeta(3/2)^4 / zeta(3).
    #[serde(rename = "C")]
    pub c: f64,
    /// Mean-square constant of Delta (and of Delta*): C / (6 pi^2).
    #[serde(rename = "A")]
    pub a: f64,
    /// Mean-square constant of E: (2/3) (2 pi)^{-1/2} C.
    #[serde(rename = "B")]
    pub b: f64,
    /// Coefficient of n^{3/2} T^{-1/2} in the expansion of Atkinson's phase.
    pub a1: f64,
}

/// (1/6) sqrt(2 pi^3).
pub fn atkinson_a1() -> f64 {
    (2.0 * PI.powi(3)).sqrt() / 6.0
}

/// Builds (once) and returns the constants registry.
pub fn constants() -> Result<ConstantsRegistry> {
    static CACHE: OnceLock<Result<ConstantsRegistry>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let series = d2_zeta_constant(REGISTRY_TOLERANCE)?;
            let c = series.value;
            Ok(ConstantsRegistry {
                gamma: EULER_GAMMA,
                zeta2: zeta_real(2.0)?,
                zeta3: zeta_real(3.0)?,
                zeta32: zeta_real(1.5)?,
                c,
                a: c / (6.0 * PI * PI),
                b: (2.0 / 3.0) * (2.0 * PI).powf(-0.5) * c,
                a1: atkinson_a1(),
            })
        })
        .clone()
}
