//! Plain JSON cache of Monte-Carlo volume estimates keyed by
//! `spec|samples|seed`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use bergman_eggs::verify::McEstimate;
use bergman_eggs::{DomainSpec, Error, Result};
use serde_json::{json, Value};

pub fn key(spec: &DomainSpec, samples: u64, seed: u64) -> String {
    format!("{spec}|{samples}|{seed}")
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Parse {
        what: "volume cache",
        input: format!("{}: {e}", path.display()),
    }
}

fn load(path: &Path) -> Result<BTreeMap<String, Value>> {
    match fs::read_to_string(path) {
        Ok(text) => serde_json::from_str(&text).map_err(|e| io_error(path, e)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(BTreeMap::new()),
        Err(e) => Err(io_error(path, e)),
    }
}

pub fn store(path: &Path, spec: &DomainSpec, est: &McEstimate) -> Result<()> {
    let mut entries = load(path)?;
    entries.insert(
        key(spec, est.samples, est.seed),
        json!({ "value": est.value, "std_error": est.std_error }),
    );
    let text = serde_json::to_string_pretty(&entries).map_err(|e| io_error(path, e))?;
    fs::write(path, text + "\n").map_err(|e| io_error(path, e))
}

/// The cached estimate for `spec` with the most samples, if any.
pub fn lookup(path: &Path, spec: &DomainSpec) -> Result<Option<f64>> {
    let prefix = format!("{spec}|");
    let best = load(path)?
        .into_iter()
        .filter_map(|(k, v)| {
            let samples: u64 = k.strip_prefix(&prefix)?.split('|').next()?.parse().ok()?;
            Some((samples, v["value"].as_f64()?))
        })
        .max_by_key(|(samples, _)| *samples);
    Ok(best.map(|(_, v)| v))
}
