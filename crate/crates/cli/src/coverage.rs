//! Parallel driver for the coverage estimator.
//!
//! Each sample's ratio vector is a pure function of (seed, index), so
//! splitting the index range across a thread pool and summing the hit
//! indicators reproduces the sequential estimate bit for bit.

use lonerun_core::crt::certify_good;
use lonerun_core::measure::{coverage_monte_carlo, coverage_sample, CoverageEstimate};
use lonerun_core::rat::Rat;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::AppError;

/// Same estimate as `coverage_monte_carlo`, computed on `threads`
/// worker threads. `threads == 1` runs the sequential path directly.
pub fn coverage_parallel(
    n: usize,
    d_max: u64,
    samples: u64,
    seed: u64,
    ratio_low: &Rat,
    ratio_high: &Rat,
    threads: usize,
) -> Result<CoverageEstimate, AppError> {
    if threads <= 1 {
        return Ok(coverage_monte_carlo(
            n, d_max, samples, seed, ratio_low, ratio_high,
        )?);
    }
    // Validate exactly as the sequential path does (cheap: one sample).
    coverage_monte_carlo(n, d_max, 1, seed, ratio_low, ratio_high)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| AppError::Cache(format!("thread pool: {e}")))?;
    let hits = pool.install(|| {
        (0..samples)
            .into_par_iter()
            .filter(|&index| {
                let r = coverage_sample(seed, index, n, ratio_low, ratio_high);
                certify_good(&r, d_max).is_some()
            })
            .count() as u64
    });
    Ok(CoverageEstimate {
        n,
        d_max,
        sample_count: samples,
        hits,
        fraction: Rat::new(BigInt::from(hits), BigInt::from(samples)),
        seed,
    })
}
