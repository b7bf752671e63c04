use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Sieve,
    Delta,
    Voronoi,
    Atkinson,
    Sweep,
    Fit,
    Mainterm,
    Constants,
    Report,
}

/// Record of one invocation, written next to its outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: CommandKind,
    /// Numeric and mode parameters, each in its shortest round-trip form.
    pub params: BTreeMap<String, String>,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
    pub config_hash: String,
    pub tool_version: String,
}

impl RunManifest {
    pub fn new(command: CommandKind, params: BTreeMap<String, String>) -> Self {
        let config_hash = params_hash(command, &params);
        Self {
            command,
            params,
            inputs: Vec::new(),
            outputs: Vec::new(),
            config_hash,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// sha256 over the command name and the sorted parameters, first 8 bytes.
pub fn params_hash(command: CommandKind, params: &BTreeMap<String, String>) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_string(&command).expect("enum serializes").as_bytes());
    for (k, v) in params {
        h.update(b"\n");
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
    }
    hex::encode(&h.finalize()[..8])
}

/// Writes via a temporary file in the target directory and renames it into
/// place, so the target never holds a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".manifest.json");
    out.with_file_name(name)
}

pub fn write_manifest(path: &Path, manifest: &RunManifest) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(manifest).map_err(io::Error::other)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

pub fn read_text(path: &Path) -> io::Result<String> {
    fs::read_to_string(path)
}

/// CSV float: 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let mut params = BTreeMap::new();
        params.insert("t_max".into(), format!("{:?}", 0.1 + 0.2));
        params.insert("precision".into(), "dd".into());
        let mut m = RunManifest::new(CommandKind::Sweep, params);
        m.outputs.push("a/b.csv".into());
        let text = serde_json::to_string(&m).unwrap();
        let back: RunManifest = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.params["t_max"].parse::<f64>().unwrap(), 0.1 + 0.2);
    }

    #[test]
    fn hash_depends_on_every_param() {
        let mut p = BTreeMap::new();
        p.insert("x".to_string(), "1.0".to_string());
        let a = params_hash(CommandKind::Delta, &p);
        assert_eq!(a, params_hash(CommandKind::Delta, &p.clone()));
        assert_ne!(a, params_hash(CommandKind::Voronoi, &p));
        p.insert("x".to_string(), "1.5".to_string());
        assert_ne!(a, params_hash(CommandKind::Delta, &p));
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(manifest_path(Path::new("out/sweep.csv")), PathBuf::from("out/sweep.csv.manifest.json"));
    }
}
