use std::fmt::Write as _;

use super::SweepState;
use crate::error::{Error, Result};

pub const FORMAT_ID: &str = "estar-sweep v1";
pub const CSV_COLUMNS: &str = "t,cum_zeta_sq,alt_sum,E,delta_star,e_star,cum_e_sq,cum_estar_sq";

pub fn header_line(config_hash: &str) -> String {
    format!("# {FORMAT_ID} config={config_hash}")
}

/// One CSV row, floats with 17 significant digits.
pub fn format_row(s: &SweepState) -> String {
    let mut out = String::with_capacity(200);
    let _ = write!(
        out,
        "{:.16e},{:.16e},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
        s.t, s.cum_zeta_sq, s.alt_sum, s.e, s.delta_star, s.e_star, s.cum_e_sq, s.cum_estar_sq
    );
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckpointFile {
    pub config_hash: String,
    pub rows: Vec<SweepState>,
}

pub fn parse_checkpoints(text: &str) -> Result<CheckpointFile> {
    let bad = |line: usize, msg: &str| Error::InvalidArgument(format!("checkpoint line {line}: {msg}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    let rest = header
        .strip_prefix("# ")
        .and_then(|h| h.strip_prefix(FORMAT_ID))
        .ok_or_else(|| bad(1, "unknown format header"))?;
    let config_hash = rest
        .trim()
        .strip_prefix("config=")
        .ok_or_else(|| bad(1, "missing config hash"))?
        .to_string();
    match lines.next() {
        Some(cols) if cols == CSV_COLUMNS => {}
        _ => return Err(bad(2, "unexpected column header")),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 3;
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 8 {
            return Err(bad(lineno, "expected 8 fields"));
        }
        let num = |j: usize| f[j].parse::<f64>().map_err(|_| bad(lineno, "malformed number"));
        rows.push(SweepState {
            t: num(0)?,
            cum_zeta_sq: num(1)?,
            alt_sum: f[2].parse().map_err(|_| bad(lineno, "malformed alt_sum"))?,
            e: num(3)?,
            delta_star: num(4)?,
            e_star: num(5)?,
            cum_e_sq: num(6)?,
            cum_estar_sq: num(7)?,
        });
    }
    Ok(CheckpointFile { config_hash, rows })
}
