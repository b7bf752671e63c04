//! Numerical laboratory for the mean square of E*(t) = E(t) - 2 pi Delta*(t / 2 pi).
//!
//! E(T) is the error term in the mean square of zeta on the critical line and
//! Delta*(x) is an alternating variant of the Dirichlet divisor problem error.
//! The crate evaluates both exactly (up to floating point), computes the
//! cumulative integrals of E^2 and E*^2 in one forward sweep, and compares
//! them against the asymptotic predictions.

// NaN-rejecting guards are written as !(x > lo) on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod asympt;
pub mod constants;
pub mod divisor;
pub mod error;
pub mod meansq;
pub mod numeric;
pub mod voronoi;
pub mod zeta;

pub use error::{Error, Result};
