use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} = {value} is outside the admissible range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("cannot allocate {0}")]
    Resource(String),

    #[error("zeta(s) has a pole at s = 1")]
    Pole,

    #[error("Euler-Maclaurin evaluation at t = {t} needs at least {required} terms, got {given}")]
    InsufficientTerms { t: f64, required: usize, given: usize },

    #[error("t = {t} is below the Riemann-Siegel cutoff {cutoff}; use Euler-Maclaurin")]
    BelowRsCutoff { t: f64, cutoff: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("rank-deficient design: {0}")]
    Conditioning(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if value >= lo && value <= hi {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, value, lo, hi })
    }
}
