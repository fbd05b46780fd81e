//! Batch classification of integer velocity vectors with a resumable
//! JSON-lines cache.
//!
//! Classification is invariant under permuting the runners, so vectors
//! are enumerated as ascending combinations and keyed by their sorted
//! component string. Rerunning against an existing cache skips every
//! key already present, recomputing nothing.

use std::collections::HashMap;
use std::path::Path;

use lonerun_core::gap::{classify, max_gap, ClassKind, VelocityVector};
use lonerun_core::rat::to_pq_string;
use rayon::prelude::*;

use crate::format::{kind_name, SweepRecordDoc, SweepResultDoc, SweepSummaryDoc};
use crate::{cache, AppError};

/// Guard rails; exceeding them without `force` is a usage error.
pub const MAX_N: usize = 5;
pub const MAX_V: u64 = 60;

#[derive(Debug, Clone)]
pub struct SweepParams {
    pub n: usize,
    pub v_max: u64,
    /// Override the guard rails.
    pub force: bool,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub summary: SweepSummaryDoc,
    /// All records in enumeration order (cached and fresh alike).
    pub records: Vec<SweepRecordDoc>,
}

/// Ascending combinations of n distinct speeds from `1..=v_max`.
pub fn integer_vectors(n: usize, v_max: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, v_max: u64, start: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in start..=v_max {
            cur.push(v);
            rec(n, v_max, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, v_max, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Canonical cache key: sorted components joined by commas.
pub fn cache_key(v: &[u64]) -> String {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn classify_record(v: &[u64]) -> SweepRecordDoc {
    let velocity = VelocityVector::from_integers(v).expect("sweep vectors are positive");
    let classification = classify(&velocity);
    let report = max_gap(&velocity);
    SweepRecordDoc {
        key: cache_key(v),
        input: v.to_vec(),
        result: SweepResultDoc {
            kind: kind_name(classification.kind).to_string(),
            gap: to_pq_string(&report.value),
            witness: to_pq_string(&report.witness_time),
            plateau_start: classification.plateau_start.as_ref().map(to_pq_string),
            plateau_length: classification.plateau_length.as_ref().map(to_pq_string),
        },
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

/// Classify every vector, reusing cached records and appending only the
/// newly computed ones to the cache file.
pub fn run_sweep(
    params: &SweepParams,
    cache_path: Option<&Path>,
) -> Result<SweepOutcome, AppError> {
    if params.n == 0 {
        return Err(AppError::usage("sweep requires n >= 1"));
    }
    if !params.force && (params.n > MAX_N || params.v_max > MAX_V) {
        return Err(AppError::usage(format!(
            "sweep guard rails: n <= {MAX_N}, v_max <= {MAX_V} (use --force to override)"
        )));
    }

    let vectors = integer_vectors(params.n, params.v_max);
    let cached: HashMap<String, SweepRecordDoc> = match cache_path {
        Some(path) => cache::read_jsonl::<SweepRecordDoc>(path)?
            .into_iter()
            .map(|r| (r.key.clone(), r))
            .collect(),
        None => HashMap::new(),
    };

    let missing: Vec<&Vec<u64>> = vectors
        .iter()
        .filter(|v| !cached.contains_key(&cache_key(v)))
        .collect();
    // Vectors are independent; rayon preserves collection order.
    let fresh: Vec<SweepRecordDoc> = missing.par_iter().map(|v| classify_record(v)).collect();
    if let Some(path) = cache_path {
        cache::append_jsonl(path, &fresh)?;
    }

    let mut by_key: HashMap<&str, &SweepRecordDoc> =
        cached.values().map(|r| (r.key.as_str(), r)).collect();
    for record in &fresh {
        by_key.insert(record.key.as_str(), record);
    }
    let records: Vec<SweepRecordDoc> = vectors
        .iter()
        .map(|v| {
            let key = cache_key(v);
            (*by_key.get(key.as_str()).expect("every vector classified")).clone()
        })
        .collect();

    let count = |kind: ClassKind| {
        records
            .iter()
            .filter(|r| r.result.kind == kind_name(kind))
            .count() as u64
    };
    let summary = SweepSummaryDoc {
        n: params.n,
        v_max: params.v_max,
        total: records.len() as u64,
        computed: fresh.len() as u64,
        from_cache: (records.len() - fresh.len()) as u64,
        exact: count(ClassKind::Exact),
        pseudo_exact: count(ClassKind::PseudoExact),
        gap_exceeds_bound: count(ClassKind::GapExceedsBound),
        gap_below_bound: count(ClassKind::GapBelowBound),
        cache: cache_path.map(|p| p.display().to_string()),
    };
    Ok(SweepOutcome { summary, records })
}
