//! Floating-point building blocks shared by the evaluators: compensated and
//! double-double accumulation, angle reduction, and quadrature rules.

mod dd;
mod quad;
mod sum;

pub use dd::{reduce_angle, DoubleDouble};
pub use quad::{integrate_adaptive, AdaptiveResult, GaussLegendre, PanelRule};
pub use sum::{Accumulator, Neumaier, PrecisionMode};
