//! Checkpointed volume summation.
//!
//! The checkpoint file is JSON-lines: a header line pinning (n, d_max)
//! followed by one record per strictly feasible best set in enumeration
//! order, carrying the term and the running sum as exact fractions.
//! Resuming replays the cumulative sum from the last record and
//! computes only the remaining sets; a header mismatch is an error
//! (enumeration order interleaves when d_max changes, so checkpoints
//! are only valid for identical parameters).

use std::path::Path;

use lonerun_core::measure::{strictly_feasible_best_sets, volume_term};
use lonerun_core::rat::{parse_rat, to_pq_string, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use crate::format::{VolumeHeaderDoc, VolumeRecordDoc, VolumeSumDoc};
use crate::{cache, AppError};

const HEADER_KIND: &str = "volume-checkpoint";

pub const HEURISTIC_NOTE: &str = "sum over strictly feasible divisor sets only; certified \
     regions of different sets may overlap and the 2^(n-1) sign-pattern factor is kept from \
     the enumeration convention, so treat this as a diagnostic figure, not a probability";

#[derive(Debug, Clone)]
pub struct VolumeRunOutcome {
    pub doc: VolumeSumDoc,
    pub records: Vec<VolumeRecordDoc>,
    pub newly_computed: usize,
}

fn parse_header(value: &Value, path: &Path) -> Result<VolumeHeaderDoc, AppError> {
    serde_json::from_value(value.clone())
        .map_err(|e| AppError::Cache(format!("{}: bad header: {e}", path.display())))
}

/// Exact volume sum for `n` runners and divisors up to `d_max`,
/// optionally resuming from / extending a checkpoint file.
pub fn volume_sum_with_checkpoint(
    n: usize,
    d_max: u64,
    cache_path: Option<&Path>,
) -> Result<VolumeRunOutcome, AppError> {
    let sets = strictly_feasible_best_sets(n, d_max)?;

    let mut cached: Vec<VolumeRecordDoc> = Vec::new();
    if let Some(path) = cache_path {
        let lines: Vec<Value> = cache::read_jsonl(path)?;
        if let Some((head, tail)) = lines.split_first() {
            let header = parse_header(head, path)?;
            if header.kind != HEADER_KIND || header.n != n || header.d_max != d_max {
                return Err(AppError::Cache(format!(
                    "{}: checkpoint is for kind={} n={} d_max={}, not n={n} d_max={d_max}",
                    path.display(),
                    header.kind,
                    header.n,
                    header.d_max
                )));
            }
            for (idx, value) in tail.iter().enumerate() {
                let record: VolumeRecordDoc = serde_json::from_value(value.clone())
                    .map_err(|e| AppError::Cache(format!("{}:{}: {e}", path.display(), idx + 2)))?;
                cached.push(record);
            }
        } else {
            let header = VolumeHeaderDoc {
                kind: HEADER_KIND.to_string(),
                n,
                d_max,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            };
            cache::append_jsonl(path, &[header])?;
        }
        if cached.len() > sets.len() {
            return Err(AppError::Cache(format!(
                "{}: checkpoint has {} records but only {} sets exist",
                path.display(),
                cached.len(),
                sets.len()
            )));
        }
    }

    // Replay: trust the cached prefix (validating the divisor tuples),
    // recompute nothing.
    let mut cumulative = Rat::zero();
    let mut records = Vec::with_capacity(sets.len());
    for (record, set) in cached.iter().zip(&sets) {
        let expected = set
            .to_u64s()
            .ok_or_else(|| AppError::Cache("divisor exceeds u64".into()))?;
        if record.d != expected {
            return Err(AppError::Cache(format!(
                "checkpoint diverges from enumeration: saw {:?}, expected {:?}",
                record.d, expected
            )));
        }
        cumulative = parse_rat(&record.cumulative)?;
        records.push(record.clone());
    }

    let mut fresh = Vec::new();
    for set in sets.iter().skip(cached.len()) {
        let term = volume_term(set, n)?;
        cumulative = &cumulative + &term.term;
        let record = VolumeRecordDoc {
            d: set
                .to_u64s()
                .ok_or_else(|| AppError::Cache("divisor exceeds u64".into()))?,
            term: to_pq_string(&term.term),
            cumulative: to_pq_string(&cumulative),
        };
        fresh.push(record.clone());
        records.push(record);
    }
    if let Some(path) = cache_path {
        cache::append_jsonl(path, &fresh)?;
    }

    let factor = BigInt::from(2).pow(n as u32 - 1);
    let scaled = &cumulative * Rat::from_integer(factor.clone());
    let doc = VolumeSumDoc {
        n,
        d_max,
        sets: sets.len() as u64,
        sum_terms: to_pq_string(&cumulative),
        factor: factor.to_string(),
        scaled_sum: to_pq_string(&scaled),
        heuristic: true,
        note: HEURISTIC_NOTE.to_string(),
    };
    let newly_computed = fresh.len();
    Ok(VolumeRunOutcome {
        doc,
        records,
        newly_computed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lonerun_core::measure::volume_sum;

    #[test]
    fn checkpoint_replay_recomputes_nothing_and_agrees() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("volume.jsonl");
        let first = volume_sum_with_checkpoint(2, 9, Some(&path)).unwrap();
        assert!(first.newly_computed > 0);
        let bytes_before = std::fs::read(&path).unwrap();
        let second = volume_sum_with_checkpoint(2, 9, Some(&path)).unwrap();
        assert_eq!(second.newly_computed, 0);
        assert_eq!(first.doc, second.doc);
        assert_eq!(std::fs::read(&path).unwrap(), bytes_before);
        // checkpointed result equals the direct sum
        let direct = volume_sum(2, 9).unwrap();
        assert_eq!(parse_rat(&first.doc.scaled_sum).unwrap(), direct);
    }

    #[test]
    fn checkpoint_parameter_mismatch_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("volume.jsonl");
        volume_sum_with_checkpoint(2, 7, Some(&path)).unwrap();
        let err = volume_sum_with_checkpoint(2, 9, Some(&path));
        assert!(err.is_err());
    }
}
