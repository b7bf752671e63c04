//! Command-line front end for the `estar` library.
//!
//! Every subcommand either prints its JSON result or, with `--out`, writes it
//! atomically next to a `.manifest.json` sidecar and prints a one-line summary.
//! Exit status is 0 on success, 1 for runtime and module errors and 2 for
//! usage errors.

// NaN-rejecting guards are written as !(x > lo) on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use estar::asympt::{
    lemma3_check, mainterm_cutoff, mainterm_semianalytic, mainterm_small_angle_n1, moment_curve, ratio_report,
    semianalytic_leading_coefficient, DyadicGrid,
};
use estar::divisor::{delta, delta_star_combination, delta_star_direct, DivisorTable};
use estar::meansq::{
    constants, e_atkinson, e_quadrature, format_row, header_line, parse_checkpoints, run_sweep_with, SweepConfig,
    SweepOptions, SweepState, CSV_COLUMNS,
};
use estar::numeric::PrecisionMode;
use estar::voronoi::delta_star_voronoi;

pub use output::{manifest_path, params_hash, write_atomic, CommandKind, RunManifest};
use output::{num, read_text, write_manifest};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Module(estar::Error),
    Io(PathBuf, io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Module(_) | CliError::Io(..) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Module(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

impl From<estar::Error> for CliError {
    fn from(e: estar::Error) -> Self {
        CliError::Module(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn io_at<T>(path: &Path, r: io::Result<T>) -> CliResult<T> {
    r.map_err(|e| CliError::Io(path.to_path_buf(), e))
}

#[derive(Parser, Debug)]
#[command(name = "estar", version, about = "Mean square of E*(t) = E(t) - 2 pi Delta*(t / 2 pi)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Divisor counts with running sums, as CSV.
    Sieve {
        #[arg(long)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Delta(x) and Delta*(x) by both routes.
    Delta {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated Voronoi series for Delta*(x) against the exact value.
    Voronoi {
        #[arg(long)]
        x: f64,
        #[arg(long = "n-cutoff")]
        n_cutoff: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Atkinson's formula for E(T) against direct quadrature.
    Atkinson {
        #[arg(long)]
        t: f64,
        /// Defaults to floor(T).
        #[arg(long = "n-cutoff")]
        n_cutoff: Option<usize>,
        #[command(flatten)]
        sweep: SweepFlags,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Running integrals of |zeta|^2, E^2 and E*^2 as a checkpoint CSV.
    Sweep {
        #[arg(long = "t-max")]
        t_max: f64,
        #[command(flatten)]
        sweep: SweepFlags,
        /// Continue an existing checkpoint file; it is also the default output.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Log-cubic fit of sum_{n <= x} d(n)^2 n^a over a dyadic grid.
    Fit {
        #[arg(long, value_parser = DyadicGrid::from_str)]
        grid: DyadicGrid,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagonal main term M(T) for int_T^{2T} E*(t)^2 dt.
    Mainterm {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constants of the mean-square laws as JSON.
    Constants {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep, ratio table, fits and moments, written as plot-ready CSV files.
    Report {
        #[arg(long, value_parser = DyadicGrid::from_str, default_value = "dyadic:2000:50000:2")]
        grid: DyadicGrid,
        /// Defaults to the top of the grid.
        #[arg(long = "t-max")]
        t_max: Option<f64>,
        #[command(flatten)]
        sweep: SweepFlags,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct SweepFlags {
    /// Grid step for E* samples.
    #[arg(long, default_value_t = 0.05)]
    step: f64,
    #[arg(long = "panel-w0", default_value_t = 0.25)]
    panel_w0: f64,
    /// Gauss-Legendre nodes per panel.
    #[arg(long, default_value_t = 8)]
    nodes: usize,
    #[arg(long = "checkpoint-interval", default_value_t = 100.0)]
    checkpoint_interval: f64,
    #[arg(long, value_parser = PrecisionMode::from_str, default_value = "double")]
    precision: PrecisionMode,
}

impl SweepFlags {
    fn config(&self, t_max: f64) -> SweepConfig {
        SweepConfig {
            t_max,
            panel_w0: self.panel_w0,
            nodes_per_panel: self.nodes,
            estar_step: self.step,
            checkpoint_interval: self.checkpoint_interval,
            precision: self.precision,
            ..SweepConfig::default()
        }
    }

    fn params(&self, p: &mut BTreeMap<String, String>) {
        p.insert("step".into(), format!("{:?}", self.step));
        p.insert("panel_w0".into(), format!("{:?}", self.panel_w0));
        p.insert("nodes".into(), self.nodes.to_string());
        p.insert("checkpoint_interval".into(), format!("{:?}", self.checkpoint_interval));
        p.insert("precision".into(), self.precision.label().into());
    }
}

/// Parses `argv` (program name first), runs one subcommand and returns the
/// exit status.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("estar: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Sieve { limit, out } => sieve(limit, out),
        Command::Delta { x, out } => delta_cmd(x, out),
        Command::Voronoi { x, n_cutoff, out } => voronoi(x, n_cutoff, out),
        Command::Atkinson { t, n_cutoff, sweep, out } => atkinson(t, n_cutoff, sweep, out),
        Command::Sweep { t_max, sweep: flags, resume, out } => sweep(t_max, flags, resume, out),
        Command::Fit { grid, a, out } => fit(grid, a, out),
        Command::Mainterm { t, out } => mainterm(t, out),
        Command::Constants { out } => constants_cmd(out),
        Command::Report { grid, t_max, sweep, out } => report(grid, t_max, sweep, out),
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn finish(manifest: RunManifest, body: &[u8], out: Option<PathBuf>, summary: String) -> CliResult<()> {
    match out {
        Some(path) => {
            io_at(&path, write_atomic(&path, body))?;
            let mut m = manifest;
            m.outputs.push(path.clone());
            let side = manifest_path(&path);
            io_at(&side, write_manifest(&side, &m))?;
            println!("{summary} -> {}", path.display());
        }
        None => print!("{}", String::from_utf8_lossy(body)),
    }
    Ok(())
}

fn json_body<T: Serialize>(value: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s.into_bytes()
}

fn table_for(x: f64) -> CliResult<DivisorTable> {
    if !x.is_finite() || x < 0.0 {
        return Err(estar::Error::InvalidArgument(format!("table size {x} must be finite and nonnegative")).into());
    }
    Ok(DivisorTable::sieve((x.ceil() as usize).max(1) + 1)?)
}

fn sieve(limit: usize, out: Option<PathBuf>) -> CliResult<()> {
    let table = DivisorTable::sieve(limit)?;
    let m = RunManifest::new(CommandKind::Sieve, params([("limit", limit.to_string())]));
    let summary = format!(
        "sieve: limit {limit}, sum d(n) = {}, alternating sum = {}",
        table.prefix(limit),
        table.alt_prefix(limit)
    );
    match out {
        Some(_) => {
            let mut body = String::from("n,d,prefix,alt_prefix\n");
            for n in 1..=limit {
                body.push_str(&format!("{n},{},{},{}\n", table.d(n), table.prefix(n), table.alt_prefix(n)));
            }
            finish(m, body.as_bytes(), out, summary)
        }
        None => {
            println!("{summary}");
            Ok(())
        }
    }
}

fn delta_cmd(x: f64, out: Option<PathBuf>) -> CliResult<()> {
    let table = table_for(4.0 * x)?;
    let star = delta_star_direct(x, &table)?;
    let (d, combo) = if x >= 1.0 {
        (Some(delta(x, &table)?), Some(delta_star_combination(x, &table)?))
    } else {
        (None, None)
    };
    let body = json_body(&json!({ "x": x, "delta": d, "delta_star": star, "delta_star_combination": combo }));
    let m = RunManifest::new(CommandKind::Delta, params([("x", format!("{x:?}"))]));
    finish(m, &body, out, format!("delta: x = {x}, Delta* = {star}"))
}

fn voronoi(x: f64, n: usize, out: Option<PathBuf>) -> CliResult<()> {
    let table = table_for((4.0 * x).max(n as f64))?;
    let v = delta_star_voronoi(x, n, &table)?;
    let exact = delta_star_direct(x, &table)?;
    let body = json_body(&json!({
        "x": x, "N": n, "value": v.value, "exact": exact,
        "deviation": (v.value - exact).abs(), "error_bound": v.error_bound,
    }));
    let m = RunManifest::new(CommandKind::Voronoi, params([("x", format!("{x:?}")), ("n_cutoff", n.to_string())]));
    finish(m, &body, out, format!("voronoi: x = {x}, N = {n}, deviation {:.6e}", (v.value - exact).abs()))
}

fn atkinson(t: f64, n: Option<usize>, flags: SweepFlags, out: Option<PathBuf>) -> CliResult<()> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(estar::Error::OutOfRange { what: "T", value: t, lo: 1.0, hi: f64::INFINITY }.into());
    }
    let n = n.unwrap_or(t.floor() as usize);
    let table = table_for(n as f64)?;
    let atk = e_atkinson(t, n, &table)?;
    let cfg = flags.config(SweepConfig::default().t_max);
    let quad = e_quadrature(t, &cfg)?;
    let ratio = (atk.value - quad).abs() / t.ln().powi(2);
    let body = json_body(&json!({ "atkinson": atk, "e_quadrature": quad, "difference_over_log2": ratio }));
    let mut p = params([("t", format!("{t:?}")), ("n_cutoff", n.to_string())]);
    flags.params(&mut p);
    let m = RunManifest::new(CommandKind::Atkinson, p);
    finish(m, &body, out, format!("atkinson: T = {t}, |difference| / log^2 T = {ratio:.6}"))
}

fn sweep_table(config: &SweepConfig) -> CliResult<DivisorTable> {
    config.validate()?;
    table_for(4.0 * config.t_max / (2.0 * PI) + 1.0)
}

fn checkpoint_text(hash: &str, rows: &[SweepState]) -> String {
    let mut text = header_line(hash);
    text.push('\n');
    text.push_str(CSV_COLUMNS);
    text.push('\n');
    for r in rows {
        text.push_str(&format_row(r));
        text.push('\n');
    }
    text
}

fn sweep(t_max: f64, flags: SweepFlags, resume: Option<PathBuf>, out: Option<PathBuf>) -> CliResult<()> {
    let config = flags.config(t_max);
    let out = out
        .or_else(|| resume.clone())
        .ok_or_else(|| CliError::Usage("sweep needs --out or --resume".into()))?;
    let table = sweep_table(&config)?;
    let hash = config.config_hash();

    let mut rows: Vec<SweepState> = Vec::new();
    if let Some(path) = &resume {
        let text = io_at(path, read_text(path))?;
        let file = parse_checkpoints(&text)?;
        if file.config_hash != hash {
            return Err(estar::Error::Precondition(format!(
                "{} was written with config {}, this run is {hash}",
                path.display(),
                file.config_hash
            ))
            .into());
        }
        let every = config.checkpoint_interval;
        rows = file
            .rows
            .into_iter()
            .take_while(|r| r.t <= t_max)
            .filter(|r| {
                let k = (r.t / every).round();
                (k * every - r.t).abs() <= 1e-9 * r.t.max(1.0)
            })
            .collect();
    }
    let start = rows.last().copied();
    let opts = SweepOptions { keep_samples: false, resume: start };
    let result = run_sweep_with(&config, &table, opts, |_| {})?;
    let fresh = if start.is_some() { &result.checkpoints[1..] } else { &result.checkpoints[..] };
    rows.extend_from_slice(fresh);
    for w in &result.warnings {
        eprintln!("estar: warning: {w}");
    }

    let last = *rows.last().expect("a sweep has at least its start state");
    let mut p = params([("t_max", format!("{t_max:?}"))]);
    flags.params(&mut p);
    let mut m = RunManifest::new(CommandKind::Sweep, p);
    m.inputs.extend(resume);
    let summary = format!(
        "sweep: t_max = {t_max}, {} checkpoints, E = {:.10}, E* = {:.10}, config {hash}",
        rows.len(),
        last.e,
        last.e_star
    );
    finish(m, checkpoint_text(&hash, &rows).as_bytes(), Some(out), summary)
}

fn fit(grid: DyadicGrid, a: f64, out: Option<PathBuf>) -> CliResult<()> {
    let table = table_for(grid.hi)?;
    let report = lemma3_check(&grid.points(), a, &table)?;
    let body = json_body(&report);
    let m = RunManifest::new(CommandKind::Fit, params([("grid", grid.to_string()), ("a", format!("{a:?}"))]));
    let summary = format!(
        "fit: a = {a}, c3 = {:.6}, target {:.6}, ratio {:.4}",
        report.fit.coeffs[0], report.target_c3, report.c3_ratio
    );
    finish(m, &body, out, summary)
}

fn mainterm(t: f64, out: Option<PathBuf>) -> CliResult<()> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(estar::Error::OutOfRange { what: "T", value: t, lo: 1.0, hi: f64::INFINITY }.into());
    }
    let table = table_for(mainterm_cutoff(t) as f64)?;
    let eval = mainterm_semianalytic(t, &table)?;
    let body = json_body(&json!({
        "mainterm": eval,
        "small_angle_n1": mainterm_small_angle_n1(t),
        "leading_coefficient": semianalytic_leading_coefficient(),
    }));
    let m = RunManifest::new(CommandKind::Mainterm, params([("t", format!("{t:?}"))]));
    finish(m, &body, out, format!("mainterm: T = {t}, M = {:.10e}", eval.value))
}

fn constants_cmd(out: Option<PathBuf>) -> CliResult<()> {
    let c = constants()?;
    let m = RunManifest::new(CommandKind::Constants, BTreeMap::new());
    finish(m, &json_body(&c), out, format!("constants: C = {}", c.c))
}

const REPORT_README: &str = "# Report files

All floats carry 17 significant digits.

- `ratios.csv`: `T,I_star,ratio_14,e2_ratio`. `I_star` is int_0^T E*(t)^2 dt,
  `ratio_14` is I_star / (T^(4/3) log^3 T) and `e2_ratio` is
  int_0^T E(t)^2 dt / (B T^(3/2)).
- `fit_overlay.csv`: `T,measured,predicted`, the measured I_star against the
  fitted T^(4/3) P3(log T). Empty when there are too few grid points to fit.
- `moments.csv`: `T,M1,M2,M4,M5`, where Mp is int_0^T |E*(t)|^p dt.
- `summary.json`: fit coefficients, free exponent, lower-bound constant and
  the diagonal estimate of the leading coefficient.
- `manifest.json`: parameters and config hash of the run.
";

fn report(grid: DyadicGrid, t_max: Option<f64>, flags: SweepFlags, dir: PathBuf) -> CliResult<()> {
    let step = flags.step;
    let t_max = t_max.unwrap_or_else(|| (grid.hi / step).ceil() * step);
    let config = flags.config(t_max);
    let table = sweep_table(&config)?;
    let opts = SweepOptions { keep_samples: true, resume: None };
    let result = run_sweep_with(&config, &table, opts, |_| {})?;
    for w in &result.warnings {
        eprintln!("estar: warning: {w}");
    }
    let samples = result.samples.as_deref().expect("samples requested");
    let points: Vec<f64> = grid.snapped(step).into_iter().filter(|&t| t > 1.0 && t <= t_max).collect();
    let reg = constants()?;
    let rep = ratio_report(&points, samples, &table, &reg)?;

    io_at(&dir, fs::create_dir_all(&dir))?;
    let write = |name: &str, body: &str| {
        let path = dir.join(name);
        io_at(&path, write_atomic(&path, body.as_bytes()))
    };

    let mut ratios = String::from("T,I_star,ratio_14,e2_ratio\n");
    for r in &rep.rows {
        ratios.push_str(&format!("{},{},{},{}\n", num(r.t), num(r.i_star), num(r.ratio_14), num(r.ratio_16)));
    }
    write("ratios.csv", &ratios)?;

    let mut overlay = String::from("T,measured,predicted\n");
    if let Some(f) = &rep.fit_detail {
        for r in &rep.rows {
            overlay.push_str(&format!("{},{},{}\n", num(r.t), num(r.i_star), num(f.predict(r.t))));
        }
    }
    write("fit_overlay.csv", &overlay)?;

    let powers = [1.0, 2.0, 4.0, 5.0];
    let curves = powers
        .iter()
        .map(|&p| moment_curve(p, &points, samples))
        .collect::<estar::Result<Vec<_>>>()?;
    let mut moments = String::from("T,M1,M2,M4,M5\n");
    for (i, &t) in points.iter().enumerate() {
        let cols: Vec<String> = curves.iter().map(|c| num(c[i].1)).collect();
        moments.push_str(&format!("{},{}\n", num(t), cols.join(",")));
    }
    write("moments.csv", &moments)?;
    write("README.md", REPORT_README)?;

    let summary = json!({
        "t_max": t_max,
        "grid": grid.to_string(),
        "rows": rep.rows.len(),
        "sweep_config_hash": result.config_hash,
        "fit": rep.fit,
        "free_exponent": rep.free_exponent,
        "lower_bound_constant": rep.lower_bound_constant,
        "c3_semianalytic": rep.c3_semianalytic,
    });
    write("summary.json", &String::from_utf8(json_body(&summary)).expect("utf8"))?;

    let mut p = params([("grid", grid.to_string()), ("t_max", format!("{t_max:?}"))]);
    flags.params(&mut p);
    let mut m = RunManifest::new(CommandKind::Report, p);
    for name in ["ratios.csv", "fit_overlay.csv", "moments.csv", "README.md", "summary.json"] {
        m.outputs.push(dir.join(name));
    }
    let side = dir.join("manifest.json");
    io_at(&side, write_manifest(&side, &m))?;
    println!(
        "report: {} rows up to T = {t_max}, lower-bound constant {} -> {}",
        rep.rows.len(),
        rep.lower_bound_constant.map_or("n/a".to_string(), |c| format!("{c:.6}")),
        dir.display()
    );
    Ok(())
}
