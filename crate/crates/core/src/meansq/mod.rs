//! The forward sweep computing E(t), Delta*(t / 2 pi), E*(t) and the running
//! integrals of |zeta|^2, E^2 and E*^2, plus Atkinson's formula for E(T).

mod atkinson;
mod checkpoint;
mod sweep;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::numeric::PrecisionMode;
use crate::zeta::ZetaEvaluator;

pub use crate::constants::{constants, ConstantsRegistry};
pub use atkinson::{atkinson_n_prime, e_atkinson, AtkinsonEval, ATKINSON_N_HI, ATKINSON_N_LO};
pub use checkpoint::{format_row, header_line, parse_checkpoints, CheckpointFile, CSV_COLUMNS, FORMAT_ID};
pub use sweep::{
    e_quadrature, e_star, run_sweep, run_sweep_with, Sample, SweepOptions, SweepOutput, SweepState,
};

/// Above this t_max a double-precision sweep carries a warning.
pub const DOUBLE_MODE_T_LIMIT: f64 = 1e5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub t_max: f64,
    /// Upper bound w0 in the panel width rule min(w0, pi / log(t + 3)).
    pub panel_w0: f64,
    pub nodes_per_panel: usize,
    pub estar_step: f64,
    pub checkpoint_interval: f64,
    pub precision: PrecisionMode,
    pub zeta: ZetaEvaluator,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            t_max: 1000.0,
            panel_w0: 0.25,
            nodes_per_panel: 8,
            estar_step: 0.05,
            checkpoint_interval: 100.0,
            precision: PrecisionMode::Double,
            zeta: ZetaEvaluator::default(),
        }
    }
}

impl SweepConfig {
    pub fn with_t_max(mut self, t_max: f64) -> Self {
        self.t_max = t_max;
        self
    }

    /// Panel width at ordinate t.
    pub fn panel_width(&self, t: f64) -> f64 {
        self.panel_w0.min(std::f64::consts::PI / (t + 3.0).ln())
    }

    /// Number of estar steps in the whole sweep.
    pub fn total_steps(&self) -> usize {
        (self.t_max / self.estar_step).round() as usize
    }

    /// Number of estar steps between checkpoints.
    pub fn checkpoint_steps(&self) -> usize {
        (self.checkpoint_interval / self.estar_step).round() as usize
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if !(self.t_max >= 0.0) || !self.t_max.is_finite() {
            return bad(format!("t_max = {} must be finite and nonnegative", self.t_max));
        }
        if self.nodes_per_panel < 2 {
            return bad(format!("nodes_per_panel = {} must be at least 2", self.nodes_per_panel));
        }
        if !(self.estar_step > 0.0) || !(self.panel_w0 > 0.0) {
            return bad("estar_step and panel_w0 must be positive".into());
        }
        if self.estar_step > self.panel_width(self.t_max) * (1.0 + 1e-12) {
            return bad(format!(
                "estar_step = {} exceeds the panel width {} at t_max",
                self.estar_step,
                self.panel_width(self.t_max)
            ));
        }
        let on_grid = |v: f64| ((v / self.estar_step).round() * self.estar_step - v).abs() <= 1e-9 * v.max(1.0);
        if !(self.checkpoint_interval > 0.0) || !on_grid(self.checkpoint_interval) || self.checkpoint_steps() == 0 {
            return bad(format!(
                "checkpoint_interval = {} must be a positive multiple of estar_step = {}",
                self.checkpoint_interval, self.estar_step
            ));
        }
        if !on_grid(self.t_max) {
            return bad(format!("t_max = {} must be a multiple of estar_step = {}", self.t_max, self.estar_step));
        }
        ZetaEvaluator::new(self.zeta.rs_cutoff, self.zeta.rs_order, self.zeta.em_order)?;
        Ok(())
    }

    /// Hash of every parameter except t_max, so that a sweep extended to a
    /// larger t_max keeps its identity.
    pub fn config_hash(&self) -> String {
        let canonical = format!(
            "w0={:?};nodes={};step={:?};checkpoint={:?};precision={};rs_cutoff={:?};rs_order={};em_order={}",
            self.panel_w0,
            self.nodes_per_panel,
            self.estar_step,
            self.checkpoint_interval,
            self.precision.label(),
            self.zeta.rs_cutoff,
            self.zeta.rs_order,
            self.zeta.em_order,
        );
        let digest = Sha256::digest(canonical.as_bytes());
        hex::encode(&digest[..8])
    }

    /// Warnings attached to the sweep output.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.precision == PrecisionMode::Double && self.t_max > DOUBLE_MODE_T_LIMIT {
            out.push(format!(
                "double precision accumulators beyond t = {DOUBLE_MODE_T_LIMIT:e}; consider --precision dd"
            ));
        }
        out
    }
}
