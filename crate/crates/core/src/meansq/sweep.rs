use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::SweepConfig;
use crate::constants::EULER_GAMMA;
use crate::divisor::{delta_star_direct, divisor_main_term, DivisorTable};
use crate::error::{Error, Result};
use crate::numeric::{Accumulator, GaussLegendre, PanelRule};

/// Snapshot of the running sweep at ordinate t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepState {
    pub t: f64,
    pub cum_zeta_sq: f64,
    pub alt_sum: i64,
    #[serde(rename = "E")]
    pub e: f64,
    pub delta_star: f64,
    pub e_star: f64,
    pub cum_e_sq: f64,
    pub cum_estar_sq: f64,
}

impl SweepState {
    pub fn origin() -> Self {
        Self { t: 0.0, cum_zeta_sq: 0.0, alt_sum: 0, e: 0.0, delta_star: 0.0, e_star: 0.0, cum_e_sq: 0.0, cum_estar_sq: 0.0 }
    }
}

/// One point of the estar grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub e: f64,
    pub e_star: f64,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Keep every grid sample (t, E, E*), not just checkpoints.
    pub keep_samples: bool,
    /// Continue from this checkpoint instead of t = 0.
    pub resume: Option<SweepState>,
}

#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub config: SweepConfig,
    pub config_hash: String,
    /// Checkpoints in ascending t, starting with the initial state.
    pub checkpoints: Vec<SweepState>,
    pub samples: Option<Vec<Sample>>,
    pub warnings: Vec<String>,
}

impl SweepOutput {
    pub fn final_state(&self) -> &SweepState {
        self.checkpoints.last().expect("a sweep always has its initial state")
    }

    /// The checkpoint at exactly t, if one was emitted.
    pub fn checkpoint_at(&self, t: f64) -> Option<&SweepState> {
        let tol = 1e-9 * t.max(1.0);
        self.checkpoints.iter().find(|s| (s.t - t).abs() <= tol)
    }
}

/// T (log(T / 2 pi) + 2 gamma - 1), zero at T = 0.
#[inline]
pub(crate) fn mean_square_main_term(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * ((t / (2.0 * PI)).ln() + 2.0 * EULER_GAMMA - 1.0)
    }
}

struct Panels {
    rule: GaussLegendre,
    by_steps: Vec<Option<PanelRule>>,
}

impl Panels {
    fn new(nodes: usize) -> Self {
        Self { rule: GaussLegendre::new(nodes), by_steps: Vec::new() }
    }

    fn get(&mut self, steps: usize) -> &PanelRule {
        if self.by_steps.len() <= steps {
            self.by_steps.resize(steps + 1, None);
        }
        let rule = &self.rule;
        self.by_steps[steps].get_or_insert_with(|| PanelRule::new(rule.clone(), steps))
    }
}

fn panel_steps(config: &SweepConfig, t: f64) -> usize {
    ((config.panel_width(t) / config.estar_step + 1e-9).floor() as usize).max(1)
}

pub fn run_sweep(config: &SweepConfig, table: &DivisorTable) -> Result<SweepOutput> {
    run_sweep_with(config, table, SweepOptions::default(), |_| {})
}

/// Runs the sweep, calling `on_checkpoint` for every checkpoint after the start.
pub fn run_sweep_with<F>(
    config: &SweepConfig,
    table: &DivisorTable,
    options: SweepOptions,
    mut on_checkpoint: F,
) -> Result<SweepOutput>
where
    F: FnMut(&SweepState),
{
    config.validate()?;
    let needed = 4.0 * config.t_max / (2.0 * PI) + 1.0;
    if (table.limit() as f64) < needed {
        return Err(Error::Precondition(format!(
            "divisor table limit {} is below 4 t_max / 2 pi + 1 = {}",
            table.limit(),
            needed.ceil()
        )));
    }
    let h = config.estar_step;
    let total = config.total_steps();
    let every = config.checkpoint_steps();

    let start = options.resume.unwrap_or_else(SweepState::origin);
    let mut k = (start.t / h).round() as usize;
    if options.resume.is_some() {
        if (k as f64 * h - start.t).abs() > 1e-9 * start.t.max(1.0) || !k.is_multiple_of(every) {
            return Err(Error::Precondition(format!(
                "resume point t = {} is not a checkpoint of this configuration",
                start.t
            )));
        }
        if k > total {
            return Err(Error::Precondition(format!(
                "resume point t = {} lies beyond t_max = {}",
                start.t, config.t_max
            )));
        }
        let n = (4.0 * (start.t / (2.0 * PI))).floor() as usize;
        if table.alt_prefix(n) != start.alt_sum {
            return Err(Error::Consistency(format!(
                "checkpoint alt_sum {} disagrees with the divisor table ({})",
                start.alt_sum,
                table.alt_prefix(n)
            )));
        }
    }

    let mode = config.precision;
    let mut cum = Accumulator::new(mode, start.cum_zeta_sq);
    let mut cum_e2 = Accumulator::new(mode, start.cum_e_sq);
    let mut cum_es2 = Accumulator::new(mode, start.cum_estar_sq);
    let mut alt_sum = start.alt_sum;
    let mut alt_n = (4.0 * (start.t / (2.0 * PI))).floor() as usize;
    let mut prev = start;

    let mut samples = options.keep_samples.then(|| {
        let mut v = Vec::with_capacity(total.saturating_sub(k) + 1);
        v.push(Sample { t: start.t, e: start.e, e_star: start.e_star });
        v
    });
    let mut checkpoints = vec![start];
    let mut panels = Panels::new(config.nodes_per_panel);
    let mut values = vec![0.0; config.nodes_per_panel];
    let zeta = config.zeta;

    while k < total {
        let next_stop = ((k / every + 1) * every).min(total);
        let t0 = k as f64 * h;
        let m = panel_steps(config, t0).min(next_stop - k);
        let t1 = (k + m) as f64 * h;
        let panel = panels.get(m);
        for (v, x) in values.iter_mut().zip(panel.rule.mapped_nodes(t0, t1)) {
            *v = zeta.abs_zeta_sq(x);
        }
        let half = 0.5 * (t1 - t0);
        let base = cum.value();
        for j in 1..=m {
            let cum_now = if j == m {
                let full: f64 = panel.rule.weights().iter().zip(&values).map(|(w, f)| w * f).sum();
                cum.add(half * full);
                cum.value()
            } else {
                let part: f64 = panel.partial[j - 1].iter().zip(&values).map(|(w, f)| w * f).sum();
                base + half * part
            };
            let t = (k + j) as f64 * h;
            let x = t / (2.0 * PI);
            let target = (4.0 * x).floor() as usize;
            while alt_n < target {
                alt_n += 1;
                alt_sum += if alt_n.is_multiple_of(2) { i64::from(table.d(alt_n)) } else { -i64::from(table.d(alt_n)) };
            }
            let e = cum_now - mean_square_main_term(t);
            let delta_star = 0.5 * alt_sum as f64 - divisor_main_term(x);
            let e_star = e - 2.0 * PI * delta_star;
            cum_e2.add(0.5 * h * (prev.e * prev.e + e * e));
            cum_es2.add(0.5 * h * (prev.e_star * prev.e_star + e_star * e_star));
            prev = SweepState {
                t,
                cum_zeta_sq: cum_now,
                alt_sum,
                e,
                delta_star,
                e_star,
                cum_e_sq: cum_e2.value(),
                cum_estar_sq: cum_es2.value(),
            };
            if let Some(s) = samples.as_mut() {
                s.push(Sample { t, e, e_star });
            }
        }
        k += m;
        if k == next_stop {
            cum.fold();
            cum_e2.fold();
            cum_es2.fold();
            on_checkpoint(&prev);
            checkpoints.push(prev);
        }
    }

    Ok(SweepOutput {
        config: *config,
        config_hash: config.config_hash(),
        checkpoints,
        samples,
        warnings: config.warnings(),
    })
}

/// int_0^T |zeta(1/2 + it)|^2 dt with the sweep's panel layout; T need not
/// lie on the estar grid.
pub(crate) fn cumulative_zeta_sq(t_end: f64, config: &SweepConfig) -> Result<f64> {
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(Error::OutOfRange { what: "T", value: t_end, lo: 0.0, hi: f64::INFINITY });
    }
    let rule = GaussLegendre::new(config.nodes_per_panel);
    let h = config.estar_step;
    let mut acc = Accumulator::new(config.precision, 0.0);
    let mut k = 0usize;
    loop {
        let t0 = k as f64 * h;
        if t0 >= t_end {
            break;
        }
        let mut m = panel_steps(config, t0);
        let every = config.checkpoint_steps();
        m = m.min((k / every + 1) * every - k);
        let t1 = ((k + m) as f64 * h).min(t_end);
        acc.add(rule.integrate(t0, t1, |x| config.zeta.abs_zeta_sq(x)));
        k += m;
    }
    Ok(acc.value())
}

/// E(T) = int_0^T |zeta|^2 - T (log(T / 2 pi) + 2 gamma - 1) by a fresh
/// panel quadrature.
pub fn e_quadrature(t: f64, config: &SweepConfig) -> Result<f64> {
    Ok(cumulative_zeta_sq(t, config)? - mean_square_main_term(t))
}

/// E*(t) = E(t) - 2 pi Delta*(t / 2 pi), computed from scratch.
pub fn e_star(t: f64, config: &SweepConfig, table: &DivisorTable) -> Result<f64> {
    let e = e_quadrature(t, config)?;
    Ok(e - 2.0 * PI * delta_star_direct(t / (2.0 * PI), table)?)
}
