//! Append-only JSON-lines cache and record verification.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::job::{execute, Job};
use crate::{CliError, EXIT_OK, EXIT_VERIFICATION, SCHEMA_VERSION};

pub const CACHE_ENV: &str = "MINRAM_CACHE";
pub const DEFAULT_CACHE: &str = "minram-cache.jsonl";

pub fn resolve_path(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(p) if !p.is_empty() => PathBuf::from(p),
        _ => PathBuf::from(DEFAULT_CACHE),
    }
}

/// One line per record, written with a single `write_all` on an
/// append-mode handle.
pub fn append(path: &Path, record: &Value) -> std::io::Result<()> {
    let mut line = serde_json::to_string(record).expect("json");
    line.push('\n');
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(line.as_bytes())
}

/// The record without its timestamp; identical runs give identical payloads.
pub fn payload(record: &Value) -> Value {
    let mut v = record.clone();
    if let Some(m) = v.as_object_mut() {
        m.remove("timestamp");
    }
    v
}

/// Recomputes the record from its input and compares the results.
pub fn verify_record(record: &Value) -> Result<(), CliError> {
    if record.get("v") != Some(&json!(SCHEMA_VERSION)) {
        return Err(CliError::Input("unsupported schema version".into()));
    }
    let job = Job::from_record(record)?;
    let stored = record.get("result").ok_or_else(|| CliError::Input("record without result".into()))?;
    let again = execute(&job)?;
    if &again != stored {
        return Err(CliError::Verification(format!("{} record differs on recomputation", job.kind())));
    }
    Ok(())
}

fn read_records(text: &str) -> Result<Vec<Value>, CliError> {
    if let Ok(v) = serde_json::from_str::<Value>(text) {
        return Ok(vec![v]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1))))
        .collect()
}

/// Verifies every record in a cache file or saved report.
pub fn verify_file(path: &Path) -> Result<(Value, i32), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let records = read_records(&text)?;
    let mut failed = Vec::new();
    for (i, r) in records.iter().enumerate() {
        if let Err(e) = verify_record(r) {
            failed.push(json!({ "record": i + 1, "kind": r.get("kind"), "error": e.to_string() }));
        }
    }
    let code = if failed.is_empty() { EXIT_OK } else { EXIT_VERIFICATION };
    let doc = json!({
        "v": SCHEMA_VERSION,
        "kind": "verify",
        "result": { "records": records.len(), "verified": records.len() - failed.len(), "failed": failed },
    });
    Ok((doc, code))
}
