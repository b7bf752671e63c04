//! Asymptotic checks: log-cubic growth fits, the d(n)^2 summatory law, the
//! diagonal main term for the mean square of E*, moments and ratio tables.

mod fit;
mod grid;
mod lemma3;
mod mainterm;
mod moments;
mod report;

pub use fit::{
    fit_free_exponent, fit_log_cubic, ExponentScore, FitResult, FreeExponentFit, MIN_FIT_OCTAVES, MIN_FIT_SAMPLES,
};
pub use grid::DyadicGrid;
pub use lemma3::{lemma3_check, Lemma3Report, Lemma3Row, LEMMA3_EPSILON};
pub use mainterm::{
    mainterm_cutoff, mainterm_inner, mainterm_inner_substituted, mainterm_semianalytic, mainterm_small_angle_n1,
    semianalytic_leading_coefficient, MainTermEval, INNER_REL_TOL, SIN2_MOMENT,
};
pub use moments::{e_mean_square, moment_curve, moment_integral};
pub use report::{
    ratio_report, FitSummary, RatioReport, RatioRow, FREE_EXPONENT_POINTS, FREE_EXPONENT_RANGE,
};
