//! Loneliness gaps for rational velocity vectors.
//!
//! The instantaneous gap of `v = (v_1, ..., v_n)` at time `t` is
//! `min_i ||v_i t||`, where `||x||` is the distance from `x` to the
//! nearest integer. Its supremum over `t > 0` is computed exactly by
//! rescaling time so every velocity becomes an integer (the supremum is
//! invariant under `t -> ct`): the gap is then 1-periodic and piecewise
//! linear, so its maximum is attained where some track kinks
//! (`v_i t` a half-integer) or two tracks cross (`(v_i ± v_j) t` an
//! integer). Enumerating those finitely many candidate times in one
//! period and evaluating each one exactly yields the supremum together
//! with a witnessing time.
//!
//! Everything here is a pure function of its inputs and safe to call
//! from any number of threads.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::rat::Rat;
use crate::Result;

/// Ordered list of `n >= 1` strictly positive rational velocities.
/// The stationary runner is implicit; index order is significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VelocityVector {
    v: Vec<Rat>,
}

impl VelocityVector {
    pub fn new(v: Vec<Rat>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::EmptyVelocities);
        }
        if v.iter().any(|c| !c.is_positive()) {
            return Err(Error::NonpositiveVelocity);
        }
        Ok(VelocityVector { v })
    }

    pub fn from_integers(v: &[u64]) -> Result<Self> {
        Self::new(
            v.iter()
                .map(|&x| Rat::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    /// Number of moving runners.
    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn components(&self) -> &[Rat] {
        &self.v
    }
}

/// How a [`GapReport`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exact candidate-time sweep; the value is the true supremum.
    ExactSweep,
    /// Uniform grid evaluation; a certified lower bound on the supremum.
    GridOracle,
}

/// Time range a gap value refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Horizon {
    Unbounded,
    Bounded(Rat),
}

/// A gap value in `[0, 1/2]` with a time attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub value: Rat,
    pub witness_time: Rat,
    pub horizon: Horizon,
    pub method: Method,
}

/// Outcome of [`classify`] against the loneliness bound `1/(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    /// Global gap equals `1/(n+1)` exactly.
    Exact,
    /// Global gap exceeds `1/(n+1)`, but the running supremum dwells at
    /// exactly `1/(n+1)` over an interval of positive length.
    PseudoExact,
    /// Global gap exceeds `1/(n+1)` and the running supremum passes
    /// straight through the bound.
    GapExceedsBound,
    /// Global gap below `1/(n+1)`: a counterexample to the conjecture.
    GapBelowBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: ClassKind,
    /// First time the running supremum reaches `1/(n+1)` (pseudo-exact only).
    pub plateau_start: Option<Rat>,
    /// Length of the dwell at `1/(n+1)` (pseudo-exact only).
    pub plateau_length: Option<Rat>,
}

/// The conjectured loneliness bound `1/(n+1)` for `n` moving runners.
pub fn loneliness_bound(n: usize) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(n as u64 + 1))
}

/// Distance from `x` to the nearest integer, in `[0, 1/2]`. Exact;
/// half-integers return exactly `1/2`.
pub fn nearest_int_dist(x: &Rat) -> Rat {
    let frac = x - x.floor();
    let complement = Rat::one() - &frac;
    if frac <= complement {
        frac
    } else {
        complement
    }
}

/// `min_i ||v_i t||` at a single time `t >= 0`.
pub fn gap_at_time(v: &VelocityVector, t: &Rat) -> Result<Rat> {
    if t.is_negative() {
        return Err(Error::NegativeTime);
    }
    Ok(v.components()
        .iter()
        .map(|c| nearest_int_dist(&(c * t)))
        .min()
        .expect("velocity vector is nonempty"))
}

/// Rescaled integer velocities `u` with gcd 1, plus the factor `sigma`
/// mapping scaled time back: `v_i * (sigma * s) = u_i * s`.
fn integer_profile(v: &VelocityVector) -> (Vec<BigInt>, Rat) {
    let mut common_den = BigInt::one();
    for c in v.components() {
        common_den = common_den.lcm(c.denom());
    }
    let mut scaled: Vec<BigInt> = v
        .components()
        .iter()
        .map(|c| c.numer() * (&common_den / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for s in &scaled {
        g = g.gcd(s);
    }
    for s in &mut scaled {
        *s /= &g;
    }
    (scaled, Rat::new(common_den, g))
}

/// All kink and crossing times in `(0, 1]` for integer velocities `u`,
/// sorted ascending. The gap is linear between consecutive entries.
fn candidate_times(u: &[BigInt]) -> Vec<Rat> {
    candidate_times_up_to(u, &Rat::one())
}

/// Kink and crossing times in `(0, min(cap, 1)]` only. Bounding the
/// numerators per denominator family keeps short-horizon sweeps cheap
/// even when the rescaled velocities are huge (bisection drives the
/// scale up exponentially while shrinking the horizon to match).
fn candidate_times_up_to(u: &[BigInt], cap: &Rat) -> Vec<Rat> {
    let us: Vec<u64> = u
        .iter()
        .map(|x| {
            x.to_u64().expect(
                "scaled velocity exceeds u64; the exact sweep would enumerate too many candidates",
            )
        })
        .collect();
    let mut times: BTreeSet<Rat> = BTreeSet::new();
    let mut push_family = |den: u64| {
        let mut m_max = den;
        if *cap < Rat::one() {
            let scaled = (Rat::from_integer(BigInt::from(den)) * cap).floor();
            m_max = scaled.to_integer().to_u64().unwrap_or(0).min(den);
        }
        for k in 1..=m_max {
            times.insert(Rat::new(BigInt::from(k), BigInt::from(den)));
        }
    };
    for &ui in &us {
        push_family(ui.checked_mul(2).expect("velocity too large"));
    }
    for i in 0..us.len() {
        for j in i + 1..us.len() {
            push_family(us[i].checked_add(us[j]).expect("velocity too large"));
            let diff = us[i].abs_diff(us[j]);
            if diff > 0 {
                push_family(diff);
            }
        }
    }
    times.into_iter().collect()
}

fn min_scaled_dist(u_rats: &[Rat], s: &Rat) -> Rat {
    u_rats
        .iter()
        .map(|ur| nearest_int_dist(&(ur * s)))
        .min()
        .expect("velocity vector is nonempty")
}

fn to_rats(u: &[BigInt]) -> Vec<Rat> {
    u.iter().cloned().map(Rat::from_integer).collect()
}

/// Exact supremum of the gap over all `t > 0`, with the smallest
/// witnessing time on ties.
pub fn max_gap(v: &VelocityVector) -> GapReport {
    let (u, sigma) = integer_profile(v);
    let candidates = candidate_times(&u);
    let u_rats = to_rats(&u);
    let mut best_value = Rat::zero();
    let mut best_time = candidates[0].clone();
    for s in &candidates {
        let value = min_scaled_dist(&u_rats, s);
        if value > best_value {
            best_value = value;
            best_time = s.clone();
        }
    }
    GapReport {
        value: best_value,
        witness_time: &sigma * &best_time,
        horizon: Horizon::Unbounded,
        method: Method::ExactSweep,
    }
}

/// Brute-force lower bound: evaluate the gap at `steps` uniformly
/// spaced times across one period. Never exceeds the true supremum and
/// falls short by at most `max_i(v_i) * period / steps`.
pub fn max_gap_grid_oracle(v: &VelocityVector, steps: u64) -> Result<GapReport> {
    if steps == 0 {
        return Err(Error::ZeroSteps);
    }
    let (u, sigma) = integer_profile(v);
    let (best_scaled, best_j) = match u
        .iter()
        .map(ToPrimitive::to_u64)
        .collect::<Option<Vec<u64>>>()
    {
        Some(us) => grid_scan_u64(&us, steps),
        None => grid_scan_big(&u, steps),
    };
    let value = Rat::new(best_scaled, BigInt::from(steps));
    let witness = &sigma * &Rat::new(BigInt::from(best_j), BigInt::from(steps));
    Ok(GapReport {
        value,
        witness_time: witness,
        horizon: Horizon::Unbounded,
        method: Method::GridOracle,
    })
}

/// Returns (numerator of the best gap over the common denominator
/// `steps`, index of the earliest grid point attaining it).
fn grid_scan_u64(us: &[u64], steps: u64) -> (BigInt, u64) {
    let m = steps as u128;
    let mut best_num: u64 = 0;
    let mut best_j: u64 = 1;
    for j in 1..=steps {
        let mut row = u64::MAX;
        for &ui in us {
            let r = ((ui as u128 * j as u128) % m) as u64;
            row = row.min(r.min(steps - r));
        }
        if row > best_num {
            best_num = row;
            best_j = j;
        }
    }
    (BigInt::from(best_num), best_j)
}

fn grid_scan_big(u: &[BigInt], steps: u64) -> (BigInt, u64) {
    let m = BigInt::from(steps);
    let mut best_num = BigInt::zero();
    let mut best_j: u64 = 1;
    for j in 1..=steps {
        let jb = BigInt::from(j);
        let row = u
            .iter()
            .map(|ui| {
                let r = (ui * &jb).mod_floor(&m);
                (&m - &r).min(r)
            })
            .min()
            .expect("velocity vector is nonempty");
        if row > best_num {
            best_num = row;
            best_j = j;
        }
    }
    (best_num, best_j)
}

/// Exact supremum of the gap over `t` in `(0, T1]`. Candidates are the
/// sweep candidates up to the horizon plus the horizon itself, which
/// covers the final partial linear segment.
pub fn finite_horizon_gap(v: &VelocityVector, t1: &Rat) -> Result<GapReport> {
    if !t1.is_positive() {
        return Err(Error::NonpositiveHorizon);
    }
    let (u, sigma) = integer_profile(v);
    let u_rats = to_rats(&u);
    let s1 = t1 / &sigma;
    let candidates = candidate_times_up_to(&u, &s1);
    let mut best_value = Rat::zero();
    let mut best_time = s1.clone();
    let full_period = s1 >= Rat::one();
    for s in candidates
        .iter()
        .chain(if full_period { None } else { Some(&s1) })
    {
        let value = min_scaled_dist(&u_rats, s);
        if value > best_value {
            best_value = value;
            best_time = s.clone();
        }
    }
    Ok(GapReport {
        value: best_value,
        witness_time: &sigma * &best_time,
        horizon: Horizon::Bounded(t1.clone()),
        method: Method::ExactSweep,
    })
}

/// Classify `v` against the bound `1/(n+1)` by walking the running
/// supremum of the gap across one exact period.
///
/// The gap is piecewise linear between consecutive candidate times, so
/// the first time it reaches the bound and the first time it strictly
/// exceeds it are both exact rationals; a positive distance between
/// them is a plateau of the running supremum at exactly the bound.
pub fn classify(v: &VelocityVector) -> Classification {
    let bound = loneliness_bound(v.n());
    let (u, sigma) = integer_profile(v);
    let candidates = candidate_times(&u);
    let u_rats = to_rats(&u);
    let values: Vec<Rat> = candidates
        .iter()
        .map(|s| min_scaled_dist(&u_rats, s))
        .collect();

    let global = values.iter().max().expect("candidate set is nonempty");
    if *global < bound {
        return Classification {
            kind: ClassKind::GapBelowBound,
            plateau_start: None,
            plateau_length: None,
        };
    }
    if *global == bound {
        return Classification {
            kind: ClassKind::Exact,
            plateau_start: None,
            plateau_length: None,
        };
    }

    // Global gap exceeds the bound. Find the first breakpoint at or
    // above it; the gap rises to that level somewhere on the segment
    // leading in.
    let first_reach = values
        .iter()
        .position(|f| *f >= bound)
        .expect("global gap exceeds the bound");
    if values[first_reach] > bound {
        // Passed strictly through the level inside a segment: the
        // running supremum spends no time at the bound.
        return Classification {
            kind: ClassKind::GapExceedsBound,
            plateau_start: None,
            plateau_length: None,
        };
    }

    // Touched the bound exactly at a breakpoint. The running supremum
    // stays there until the gap first climbs above the bound.
    let touch = candidates[first_reach].clone();
    let mut seg_start = touch.clone();
    let mut seg_value = values[first_reach].clone();
    for (s, f) in candidates.iter().zip(&values).skip(first_reach + 1) {
        if *f > bound {
            let slope = (f - &seg_value) / (s - &seg_start);
            let crossing = &seg_start + &((&bound - &seg_value) / slope);
            let length = &crossing - &touch;
            if length.is_positive() {
                return Classification {
                    kind: ClassKind::PseudoExact,
                    plateau_start: Some(&sigma * &touch),
                    plateau_length: Some(&sigma * &length),
                };
            }
            return Classification {
                kind: ClassKind::GapExceedsBound,
                plateau_start: None,
                plateau_length: None,
            };
        }
        seg_start = s.clone();
        seg_value = f.clone();
    }
    unreachable!("a breakpoint past the touch attains the global gap above the bound")
}
