//! Certified ratio-space volume and its Monte Carlo cross-check.
//!
//! Each strictly feasible best set certifies an open interval of good
//! ratios per consecutive divisor pair; the product of the interval
//! widths is that set's volume term. Summing the terms over all best
//! sets with `D_n <= d_max` (times the sign-pattern factor `2^(n-1)`)
//! gives a heuristic lower-order coverage figure for ratio space: the
//! certified regions of distinct best sets are not guaranteed disjoint
//! and the sum is not normalized, so it is reported as a diagnostic,
//! not a probability. The seeded Monte Carlo estimator measures the
//! same coverage independently by sampling ratio vectors uniformly and
//! counting certified hits.
//!
//! Width identity: subtracting the interval endpoints gives
//! `2 (delta_{i+1} D_i + delta_i D_{i+1}) / ((D_{i+1} - delta_{i+1}) (D_{i+1} + delta_{i+1}))`
//! with a plus in the numerator; both routes are computed and asserted
//! equal on every term.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::crt::{
    certify_good, delta_bounds, enumerate_best_sets, ratio_intervals, BestSet, DeltaBounds,
    RatioVector,
};
use crate::error::Error;
use crate::rat::Rat;
use crate::rng::SplitMix64;
use crate::Result;

/// Name of the sample generator, recorded alongside every estimate.
pub const COVERAGE_GENERATOR: &str = "splitmix64";

/// Ratio-interval widths of one best set and their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeTerm {
    pub best_set: BestSet,
    /// `hi_i - lo_i` for each consecutive divisor pair, exact.
    pub widths: Vec<Rat>,
    /// Product of the widths; zero only if every delta in some pair vanishes.
    pub term: Rat,
}

/// Result of the seeded coverage sampler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageEstimate {
    pub n: usize,
    pub d_max: u64,
    pub sample_count: u64,
    pub hits: u64,
    pub fraction: Rat,
    pub seed: u64,
}

/// Interval width from the expanded form (plus sign in the numerator).
pub fn expanded_width(d: &BestSet, bounds: &DeltaBounds, i: usize) -> Rat {
    let d_lo = Rat::from_integer(d.divisors()[i].clone());
    let d_hi = Rat::from_integer(d.divisors()[i + 1].clone());
    let two = Rat::from_integer(BigInt::from(2));
    let numerator = two * (&bounds.delta[i + 1] * &d_lo + &bounds.delta[i] * &d_hi);
    let denominator = (&d_hi - &bounds.delta[i + 1]) * (&d_hi + &bounds.delta[i + 1]);
    numerator / denominator
}

/// Variant of [`expanded_width`] with the numerator terms subtracted
/// instead of added. It does NOT equal the interval width whenever both
/// deltas are positive; retained so the discrepancy can be demonstrated
/// (see the `minus` flag of the volume command).
pub fn minus_sign_width(d: &BestSet, bounds: &DeltaBounds, i: usize) -> Rat {
    let d_lo = Rat::from_integer(d.divisors()[i].clone());
    let d_hi = Rat::from_integer(d.divisors()[i + 1].clone());
    let two = Rat::from_integer(BigInt::from(2));
    let numerator = two * (&bounds.delta[i + 1] * &d_lo - &bounds.delta[i] * &d_hi);
    let denominator = (&d_hi - &bounds.delta[i + 1]) * (&d_hi + &bounds.delta[i + 1]);
    numerator / denominator
}

/// Widths of all ratio intervals of `d` and their product. Both the
/// endpoint difference and the expanded form are evaluated and must
/// agree exactly.
pub fn volume_term(d: &BestSet, n: usize) -> Result<VolumeTerm> {
    let bounds = delta_bounds(d, n)?;
    if !bounds.feasible {
        return Err(Error::InfeasibleBounds);
    }
    let intervals = ratio_intervals(d, &bounds)?;
    let mut widths = Vec::with_capacity(intervals.len());
    for (i, (lo, hi)) in intervals.iter().enumerate() {
        let by_endpoints = hi - lo;
        let by_expansion = expanded_width(d, &bounds, i);
        assert_eq!(
            by_endpoints,
            by_expansion,
            "interval width identity violated for {:?}",
            d.divisors()
        );
        widths.push(by_endpoints);
    }
    let term = widths.iter().fold(Rat::one(), |acc, w| acc * w);
    Ok(VolumeTerm {
        best_set: d.clone(),
        widths,
        term,
    })
}

fn validate_volume_params(n: usize, d_max: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("volume requires n >= 2"));
    }
    if d_max < 3 {
        return Err(Error::InvalidParameter("volume requires d_max >= 3"));
    }
    Ok(())
}

/// Best sets with `D_n <= d_max` whose slack is strictly positive in
/// every coordinate, in the canonical enumeration order. These are the
/// sets whose certified velocity box has positive thickness on every
/// axis; sets with some `c_i = 0` certify only a zero-measure slab and
/// are excluded from volume sums.
pub fn strictly_feasible_best_sets(n: usize, d_max: u64) -> Result<Vec<BestSet>> {
    validate_volume_params(n, d_max)?;
    Ok(enumerate_best_sets(n, d_max)
        .into_iter()
        .filter(|d| {
            delta_bounds(d, n)
                .expect("lengths agree by construction")
                .slack
                .iter()
                .all(Signed::is_positive)
        })
        .collect())
}

/// Volume terms of every strictly feasible best set with
/// `D_n <= d_max`, in the canonical enumeration order.
pub fn volume_terms(n: usize, d_max: u64) -> Result<Vec<VolumeTerm>> {
    strictly_feasible_best_sets(n, d_max)?
        .iter()
        .map(|d| volume_term(d, n))
        .collect()
}

/// `2^(n-1)` times the sum of all volume terms with `D_n <= d_max`.
/// Exact, nonnegative, and nondecreasing in `d_max`.
pub fn volume_sum(n: usize, d_max: u64) -> Result<Rat> {
    let terms = volume_terms(n, d_max)?;
    let factor = Rat::from_integer(BigInt::from(2).pow(n as u32 - 1));
    Ok(terms.iter().fold(Rat::zero(), |acc, t| acc + &t.term) * factor)
}

/// The ratio vector drawn for sample `index` under `seed`: each of the
/// `n-1` ratios is `low + (high-low) * k / 2^32` for a fresh 32-bit `k`
/// from the sample's own SplitMix64 stream. Pure function of its
/// arguments, which is what makes parallel sampling deterministic.
pub fn coverage_sample(seed: u64, index: u64, n: usize, low: &Rat, high: &Rat) -> RatioVector {
    let mut gen = SplitMix64::for_stream(seed, index);
    let span = high - low;
    let denom = BigInt::from(1u64 << 32);
    let ratios = (0..n - 1)
        .map(|_| {
            let k = BigInt::from(gen.next_u32());
            low + &span * Rat::new(k, denom.clone())
        })
        .collect();
    RatioVector::new(ratios).expect("low > 0 makes every draw positive")
}

/// Draw `samples` ratio vectors uniformly from `[low, high)^(n-1)` and
/// count how many certify as good with divisors up to `d_max`.
/// Identical seeds give identical estimates on every platform.
pub fn coverage_monte_carlo(
    n: usize,
    d_max: u64,
    samples: u64,
    seed: u64,
    ratio_low: &Rat,
    ratio_high: &Rat,
) -> Result<CoverageEstimate> {
    if n < 2 {
        return Err(Error::InvalidParameter("coverage requires n >= 2"));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("coverage requires samples >= 1"));
    }
    if !ratio_low.is_positive() || ratio_low >= ratio_high {
        return Err(Error::InvalidParameter(
            "ratio box must satisfy 0 < low < high",
        ));
    }
    let mut hits = 0u64;
    for index in 0..samples {
        let r = coverage_sample(seed, index, n, ratio_low, ratio_high);
        if certify_good(&r, d_max).is_some() {
            hits += 1;
        }
    }
    Ok(CoverageEstimate {
        n,
        d_max,
        sample_count: samples,
        hits,
        fraction: Rat::new(BigInt::from(hits), BigInt::from(samples)),
        seed,
    })
}
