//! Append-only JSON-lines files used for sweep results and volume
//! checkpoints. Records are one JSON document per line; resuming reads
//! the file back and appends only what is missing.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::AppError;

/// Environment variable naming the default cache directory. Commands
/// that take `--cache` fall back to `$LONERUN_CACHE_DIR/<auto-name>`
/// when the variable is set and the flag is absent.
pub const CACHE_DIR_ENV: &str = "LONERUN_CACHE_DIR";

pub fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)
}

/// Read every record of a JSON-lines file; a missing file is an empty
/// cache. Blank lines are ignored; a malformed line is a cache error
/// naming its line number.
pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, AppError> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let reader = BufReader::new(fs::File::open(path)?);
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line)
            .map_err(|e| AppError::Cache(format!("{}:{}: {e}", path.display(), idx + 1)))?;
        records.push(record);
    }
    Ok(records)
}

/// Append records, one per line, creating parent directories as needed.
pub fn append_jsonl<T: Serialize>(path: &Path, records: &[T]) -> Result<(), AppError> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    for record in records {
        let line = serde_json::to_string(record)
            .map_err(|e| AppError::Cache(format!("serialize: {e}")))?;
        file.write_all(line.as_bytes())?;
        file.write_all(b"\n")?;
    }
    file.flush()?;
    Ok(())
}
