//! Level-set tools on lines in velocity space, plus a floating-point
//! lonely-time scan for arbitrary real velocities.
//!
//! The finite-horizon gap `G(lambda) = sup_{t in (0,T1]} min_i ||p_i(lambda) t||`
//! along the segment `p(lambda) = (1-lambda) a + lambda b` is Lipschitz
//! in `lambda` with constant `T1 * max_i |a_i - b_i|`, so whenever the
//! endpoint gaps straddle a target level, straddle-preserving bisection
//! converges to some crossing of that level. The gap need not be
//! monotone along the line, so the crossing found is *a* crossing, not
//! necessarily the only one.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::float::FloatCore;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::gap::{finite_horizon_gap, VelocityVector};
use crate::rat::Rat;
use crate::Result;

/// A point on the segment between two velocity vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePoint {
    pub endpoint_a: VelocityVector,
    pub endpoint_b: VelocityVector,
    pub lambda: Rat,
    /// `(1-lambda) a + lambda b`, exact.
    pub point: VelocityVector,
}

/// One bisection iteration, recorded so the straddle invariant can be
/// audited after the fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectStep {
    pub lambda_lo: Rat,
    pub lambda_hi: Rat,
    pub gap_lo: Rat,
    pub gap_hi: Rat,
    pub lambda_mid: Rat,
    pub gap_mid: Rat,
}

/// Result of [`bisect_to_level`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectOutcome {
    pub point: LinePoint,
    /// Exact finite-horizon gap at the returned point.
    pub gap: Rat,
    /// False when `max_iter` ran out before reaching the tolerance.
    pub converged: bool,
    pub iterations: u32,
    pub steps: Vec<BisectStep>,
}

/// Hit found by the floating-point scan.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatSearchResult {
    pub time: f64,
    pub min_gap: f64,
    pub epsilon: f64,
    pub steps_taken: u64,
}

/// Exact convex combination of two velocity vectors. Errors if any
/// component of the combination fails to be strictly positive (which
/// cannot happen for `lambda` in `[0,1]`, enforced here).
pub fn line_point(a: &VelocityVector, b: &VelocityVector, lambda: &Rat) -> Result<LinePoint> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch);
    }
    if lambda.is_negative() || *lambda > Rat::one() {
        return Err(Error::LambdaOutOfRange);
    }
    let one_minus = Rat::one() - lambda;
    let components: Vec<Rat> = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(ai, bi)| &one_minus * ai + lambda * bi)
        .collect();
    let point = VelocityVector::new(components)?;
    Ok(LinePoint {
        endpoint_a: a.clone(),
        endpoint_b: b.clone(),
        lambda: lambda.clone(),
        point,
    })
}

/// Finite-horizon gap of the convex combination, exact.
pub fn horizon_gap_along_line(
    a: &VelocityVector,
    b: &VelocityVector,
    lambda: &Rat,
    t1: &Rat,
) -> Result<Rat> {
    let lp = line_point(a, b, lambda)?;
    Ok(finite_horizon_gap(&lp.point, t1)?.value)
}

/// Bisection on `lambda` for a point where the finite-horizon gap
/// crosses `target`.
///
/// Requires the endpoint gaps to straddle the target (one strictly
/// below, one strictly above); an endpoint already within `tol` of the
/// target is returned immediately. Each iteration halves the bracket
/// while keeping the straddle, so with Lipschitz constant
/// `L = T1 * max_i |a_i - b_i|` the value error after `k` steps is at
/// most `L / 2^k`.
pub fn bisect_to_level(
    a: &VelocityVector,
    b: &VelocityVector,
    t1: &Rat,
    target: &Rat,
    tol: &Rat,
    max_iter: u32,
) -> Result<BisectOutcome> {
    if !tol.is_positive() {
        return Err(Error::NonpositiveTolerance);
    }
    let mut lam_lo = Rat::zero();
    let mut lam_hi = Rat::one();
    let mut gap_lo = horizon_gap_along_line(a, b, &lam_lo, t1)?;
    let mut gap_hi = horizon_gap_along_line(a, b, &lam_hi, t1)?;

    for (lam, gap) in [(&lam_lo, &gap_lo), (&lam_hi, &gap_hi)] {
        if (gap - target).abs() <= *tol {
            return Ok(BisectOutcome {
                point: line_point(a, b, lam)?,
                gap: gap.clone(),
                converged: true,
                iterations: 0,
                steps: Vec::new(),
            });
        }
    }
    let lo_below = gap_lo < *target;
    let hi_below = gap_hi < *target;
    if lo_below == hi_below {
        return Err(Error::NoStraddle);
    }

    let two = Rat::from_integer(BigInt::from(2));
    let mut steps = Vec::new();
    let mut last_mid = lam_lo.clone();
    let mut last_gap = gap_lo.clone();
    for iteration in 1..=max_iter {
        let mid = (&lam_lo + &lam_hi) / &two;
        let gap_mid = horizon_gap_along_line(a, b, &mid, t1)?;
        steps.push(BisectStep {
            lambda_lo: lam_lo.clone(),
            lambda_hi: lam_hi.clone(),
            gap_lo: gap_lo.clone(),
            gap_hi: gap_hi.clone(),
            lambda_mid: mid.clone(),
            gap_mid: gap_mid.clone(),
        });
        if (&gap_mid - target).abs() <= *tol {
            return Ok(BisectOutcome {
                point: line_point(a, b, &mid)?,
                gap: gap_mid,
                converged: true,
                iterations: iteration,
                steps,
            });
        }
        if (gap_mid < *target) == lo_below {
            lam_lo = mid.clone();
            gap_lo = gap_mid.clone();
        } else {
            lam_hi = mid.clone();
            gap_hi = gap_mid.clone();
        }
        last_mid = mid;
        last_gap = gap_mid;
    }
    Ok(BisectOutcome {
        point: line_point(a, b, &last_mid)?,
        gap: last_gap,
        converged: false,
        iterations: max_iter,
        steps,
    })
}

fn float_dist_to_int(x: f64) -> f64 {
    let frac = x - FloatCore::floor(x);
    frac.min(1.0 - frac)
}

/// Scan `t = step, 2 step, ... <= t_max` and return the first time at
/// which every runner is at least `1/(n+1) - epsilon` from the start.
///
/// Purely heuristic: double precision, uniform grid. A grid fine
/// enough (`step <= epsilon / (2 max v_i)`) samples the trajectory
/// densely enough to find a hit whenever one exists with margin
/// `2 epsilon`; nearby exact rationals can then be confirmed with the
/// exact engine.
pub fn float_lonely_time_search(
    v: &[f64],
    epsilon: f64,
    t_max: f64,
    step: f64,
) -> Result<Option<FloatSearchResult>> {
    if v.is_empty() {
        return Err(Error::EmptyVelocities);
    }
    if v.iter().any(|x| !x.is_finite() || *x <= 0.0) {
        return Err(Error::NonpositiveVelocity);
    }
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidParameter("step must be positive and finite"));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter("epsilon must be positive"));
    }
    let threshold = 1.0 / (v.len() as f64 + 1.0) - epsilon;
    let mut j: u64 = 0;
    loop {
        j += 1;
        // multiply, don't accumulate: keeps the grid exact in j
        let t = j as f64 * step;
        if t > t_max {
            return Ok(None);
        }
        let min_gap = v
            .iter()
            .map(|vi| float_dist_to_int(vi * t))
            .fold(f64::INFINITY, f64::min);
        if min_gap >= threshold {
            return Ok(Some(FloatSearchResult {
                time: t,
                min_gap,
                epsilon,
                steps_taken: j,
            }));
        }
    }
}
