//! Divisor-set constructions: CRT lonely times, perturbation radii,
//! ratio intervals, and good-vector certification.
//!
//! A *best set* `D_1 < ... < D_n` of pairwise-coprime integers encodes
//! the reciprocal velocity vector `(1/D_1, ..., 1/D_n)`. Placing each
//! runner at the residue nearest `D_i/2` and solving the congruences by
//! the Chinese Remainder Theorem yields an integer time `T < prod(D)`
//! at which every runner sits in the band `[1/(n+1), n/(n+1)]`. The
//! slack between the band edge and the achieved position pays for a
//! perturbation of each velocity by up to
//! `delta_i = (1/2 - 1/(n+1) - 1/(2 D_i)) / prod(D)`,
//! so a whole box around the reciprocal vector is certified good, and
//! with it an interval of ratios `v_{i+1}/v_i` around `D_i/D_{i+1}`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::gap::VelocityVector;
use crate::rat::Rat;
use crate::Result;

/// Strictly increasing, pairwise-coprime integers, each at least 2.
///
/// A divisor of 1 would pin its runner to position 0 forever, so it is
/// rejected outright.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestSet {
    d: Vec<BigInt>,
}

impl BestSet {
    pub fn new(d: Vec<BigInt>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidBestSet("empty divisor list"));
        }
        if d.iter().any(|x| *x < BigInt::from(2)) {
            return Err(Error::InvalidBestSet("every divisor must be at least 2"));
        }
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBestSet(
                "divisors must be strictly increasing",
            ));
        }
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if !d[i].gcd(&d[j]).is_one() {
                    return Err(Error::InvalidBestSet("divisors must be pairwise coprime"));
                }
            }
        }
        Ok(BestSet { d })
    }

    pub fn from_u64s(d: &[u64]) -> Result<Self> {
        Self::new(d.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.d
    }

    pub fn product(&self) -> BigInt {
        self.d.iter().fold(BigInt::one(), |acc, x| acc * x)
    }

    /// Reciprocal velocities `(1/D_1, ..., 1/D_n)`.
    pub fn reciprocal_velocities(&self) -> VelocityVector {
        VelocityVector::new(
            self.d
                .iter()
                .map(|x| Rat::new(BigInt::one(), x.clone()))
                .collect(),
        )
        .expect("divisors are positive")
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.d.iter().map(ToPrimitive::to_u64).collect()
    }
}

/// CRT time and the runner positions it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LonelyTime {
    /// The positive integer time, unique in `[1, prod(D)]`.
    pub t: BigInt,
    /// `t mod D_i`, equal to the nearest integer to `D_i/2` (half up).
    pub residues: Vec<BigInt>,
    /// Positions `residues_i / D_i` on the circle.
    pub positions: Vec<Rat>,
}

/// Per-coordinate slack against the band edge and the velocity radii
/// it affords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaBounds {
    /// `c_i = 1/2 - 1/(n+1) - 1/(2 D_i)`; negative means infeasible.
    pub slack: Vec<Rat>,
    /// `delta_i = c_i / prod(D)`, exact (negative exactly when `c_i` is).
    pub delta: Vec<Rat>,
    /// True iff every `c_i >= 0`.
    pub feasible: bool,
}

/// Consecutive velocity ratios `R_i = v_{i+1}/v_i`, all positive. Fixes
/// a velocity vector up to one positive scale factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioVector {
    r: Vec<Rat>,
}

impl RatioVector {
    pub fn new(r: Vec<Rat>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidParameter("ratio vector is empty"));
        }
        if r.iter().any(|x| !x.is_positive()) {
            return Err(Error::NonpositiveRatio);
        }
        Ok(RatioVector { r })
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn ratios(&self) -> &[Rat] {
        &self.r
    }

    /// The velocity vector with first component `scale` and successive
    /// components multiplied out along the ratios.
    pub fn velocity_with_scale(&self, scale: &Rat) -> Result<VelocityVector> {
        let mut components = Vec::with_capacity(self.r.len() + 1);
        let mut current = scale.clone();
        components.push(current.clone());
        for ratio in &self.r {
            current = &current * ratio;
            components.push(current.clone());
        }
        VelocityVector::new(components)
    }
}

/// A best set together with everything that witnesses a ratio vector
/// as good: the CRT time, the velocity radii, the ratio intervals, and
/// a concrete scale placing the vector inside the certified box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodCertificate {
    pub best_set: BestSet,
    pub lonely_time: LonelyTime,
    pub bounds: DeltaBounds,
    pub ratio_intervals: Vec<(Rat, Rat)>,
    pub scale_witness: Option<Rat>,
}

/// Value of the quality function: the supremum of admissible products,
/// infinite when the ratio sits exactly at `D_i/D_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quality {
    Finite(Rat),
    Infinite,
}

/// Residue nearest `d/2`, rounding half up: `(d+1) div 2`.
fn nearest_half_residue(d: &BigInt) -> BigInt {
    (d + BigInt::one()) / BigInt::from(2)
}

/// The unique `T` in `[1, prod(D)]` with `T ≡ a_i (mod D_i)` for the
/// residues `a_i` nearest `D_i/2`, computed by folding the congruences
/// with modular inverses.
pub fn crt_lonely_time(d: &BestSet) -> LonelyTime {
    let residues: Vec<BigInt> = d.divisors().iter().map(nearest_half_residue).collect();
    let mut t = residues[0].clone();
    let mut modulus = d.divisors()[0].clone();
    for (a, m) in residues.iter().zip(d.divisors()).skip(1) {
        let eg = modulus.extended_gcd(m);
        debug_assert!(eg.gcd.is_one());
        // modulus * x ≡ 1 (mod m), so t + modulus * k hits a (mod m)
        // with k = (a - t) * x.
        let k = ((a - &t) * &eg.x).mod_floor(m);
        t += &modulus * &k;
        modulus *= m;
        t = t.mod_floor(&modulus);
    }
    if t.is_zero() {
        // Cannot occur for valid residues (a_i is never 0 mod D_i), but
        // keep the witness strictly positive regardless.
        t = modulus;
    }
    let positions = residues
        .iter()
        .zip(d.divisors())
        .map(|(a, m)| Rat::new(a.clone(), m.clone()))
        .collect();
    LonelyTime {
        t,
        residues,
        positions,
    }
}

/// Closed band test: `1/(n+1) <= x <= n/(n+1)`.
pub fn in_band(x: &Rat, n: usize) -> bool {
    let lo = Rat::new(BigInt::one(), BigInt::from(n as u64 + 1));
    let hi = Rat::new(BigInt::from(n as u64), BigInt::from(n as u64 + 1));
    lo <= *x && *x <= hi
}

fn slack_term(d: &BigInt, n: usize) -> Rat {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let bound = Rat::new(BigInt::one(), BigInt::from(n as u64 + 1));
    let rounding = Rat::new(BigInt::one(), BigInt::from(2) * d);
    half - bound - rounding
}

/// Slack and velocity radii for `d` with `n = d.len()` runners.
/// Infeasibility (negative slack) is flagged, not an error, because
/// enumerations still want the exact values.
pub fn delta_bounds(d: &BestSet, n: usize) -> Result<DeltaBounds> {
    if n != d.len() {
        return Err(Error::LengthMismatch);
    }
    let product = Rat::from_integer(d.product());
    let slack: Vec<Rat> = d.divisors().iter().map(|x| slack_term(x, n)).collect();
    let delta: Vec<Rat> = slack.iter().map(|c| c / &product).collect();
    let feasible = slack.iter().all(|c| !c.is_negative());
    Ok(DeltaBounds {
        slack,
        delta,
        feasible,
    })
}

/// Closed-box membership: `|w_i - 1/D_i| <= delta_i` for every i.
pub fn box_contains(d: &BestSet, bounds: &DeltaBounds, w: &VelocityVector) -> Result<bool> {
    if d.len() != w.n() || d.len() != bounds.delta.len() {
        return Err(Error::LengthMismatch);
    }
    Ok(d.divisors()
        .iter()
        .zip(bounds.delta.iter())
        .zip(w.components())
        .all(|((di, delta), wi)| {
            let center = Rat::new(BigInt::one(), di.clone());
            (wi - center).abs() <= *delta
        }))
}

/// Open ratio intervals
/// `(D_i - delta_i)/(D_{i+1} + delta_{i+1}) < R_i < (D_i + delta_i)/(D_{i+1} - delta_{i+1})`,
/// one per consecutive divisor pair. Requires feasible bounds.
pub fn ratio_intervals(d: &BestSet, bounds: &DeltaBounds) -> Result<Vec<(Rat, Rat)>> {
    if d.len() != bounds.delta.len() {
        return Err(Error::LengthMismatch);
    }
    if !bounds.feasible {
        return Err(Error::InfeasibleBounds);
    }
    let divs: Vec<Rat> = d
        .divisors()
        .iter()
        .cloned()
        .map(Rat::from_integer)
        .collect();
    Ok((0..d.len().saturating_sub(1))
        .map(|i| {
            let lo = (&divs[i] - &bounds.delta[i]) / (&divs[i + 1] + &bounds.delta[i + 1]);
            let hi = (&divs[i] + &bounds.delta[i]) / (&divs[i + 1] - &bounds.delta[i + 1]);
            (lo, hi)
        })
        .collect())
}

/// Search for a scale `s > 0` such that `w_1 = s, w_{i+1} = w_i R_i`
/// lands in the delta box of `d`. Each coordinate confines `s` to a
/// closed interval; the box admits the ratios iff the intersection of
/// all of them is nonempty. Returns the midpoint of the intersection.
pub fn realizable_scaling(
    d: &BestSet,
    bounds: &DeltaBounds,
    r: &RatioVector,
) -> Result<Option<Rat>> {
    if r.len() + 1 != d.len() || bounds.delta.len() != d.len() {
        return Err(Error::LengthMismatch);
    }
    let mut cumulative = Rat::one();
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (i, di) in d.divisors().iter().enumerate() {
        if i > 0 {
            cumulative = &cumulative * &r.ratios()[i - 1];
        }
        let center = Rat::new(BigInt::one(), di.clone());
        let l = (&center - &bounds.delta[i]) / &cumulative;
        let h = (&center + &bounds.delta[i]) / &cumulative;
        lo = Some(lo.map_or(l.clone(), |cur: Rat| cur.max(l)));
        hi = Some(hi.map_or(h.clone(), |cur: Rat| cur.min(h)));
    }
    let (lo, hi) = (lo.expect("nonempty"), hi.expect("nonempty"));
    if lo > hi {
        return Ok(None);
    }
    let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
    if mid.is_positive() {
        Ok(Some(mid))
    } else {
        Ok(None)
    }
}

/// All best sets of size `n` with `D_n <= d_max`, ordered by increasing
/// product with lexicographic tie-break. Smaller products have wider
/// certified intervals, so searches succeed earliest in this order.
pub fn enumerate_best_sets(n: usize, d_max: u64) -> Vec<BestSet> {
    fn collect(n: usize, d_max: u64, start: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for d in start..=d_max {
            if current.iter().all(|&c| num_integer::gcd(c, d) == 1) {
                current.push(d);
                collect(n, d_max, d + 1, current, out);
                current.pop();
            }
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    collect(n, d_max, 2, &mut Vec::with_capacity(n), &mut tuples);
    tuples.sort_by_key(|t| (t.iter().map(|&x| x as u128).product::<u128>(), t.clone()));
    tuples
        .into_iter()
        .map(|t| BestSet::from_u64s(&t).expect("enumeration respects the invariants"))
        .collect()
}

/// First best set (in the canonical enumeration order, `D_n <= d_max`)
/// whose feasible ratio intervals strictly contain every `R_i` and
/// whose delta box admits a concrete scaling of the ratios. Returns the
/// full certificate, or `None` when the search space is exhausted.
///
/// ```
/// use lonerun_core::crt::{certify_good, RatioVector};
/// use lonerun_core::rat::rat;
///
/// let r = RatioVector::new(vec![rat(5, 7)])?;
/// let cert = certify_good(&r, 10).expect("5/7 certifies against (5,7)");
/// assert_eq!(cert.best_set.to_u64s(), Some(vec![5, 7]));
/// assert_eq!(cert.lonely_time.t, 18.into());
/// assert_eq!(cert.scale_witness, Some(rat(1, 5)));
/// # Ok::<(), lonerun_core::Error>(())
/// ```
pub fn certify_good(r: &RatioVector, d_max: u64) -> Option<GoodCertificate> {
    let n = r.len() + 1;
    for d in enumerate_best_sets(n, d_max) {
        let bounds = delta_bounds(&d, n).expect("lengths agree by construction");
        if !bounds.feasible {
            continue;
        }
        let intervals = ratio_intervals(&d, &bounds).expect("bounds are feasible");
        let contained = intervals
            .iter()
            .zip(r.ratios())
            .all(|((lo, hi), ri)| lo < ri && ri < hi);
        if !contained {
            continue;
        }
        let scale = match realizable_scaling(&d, &bounds, r).expect("lengths agree") {
            Some(s) => s,
            None => continue,
        };
        // Belt and suspenders: verify box membership at the witness
        // before handing out a certificate.
        let witness_velocity = r
            .velocity_with_scale(&scale)
            .expect("positive scale and ratios");
        if !box_contains(&d, &bounds, &witness_velocity).expect("lengths agree") {
            continue;
        }
        let lonely_time = crt_lonely_time(&d);
        return Some(GoodCertificate {
            best_set: d,
            lonely_time,
            bounds,
            ratio_intervals: intervals,
            scale_witness: Some(scale),
        });
    }
    None
}

/// Supremum `Q` of `P = prod(D)/(D_i D_{i+1})` under which `R_i` stays
/// strictly inside its ratio interval, in closed form.
///
/// With `c_k = 1/2 - 1/(n+1) - 1/(2 D_k)` and
/// `delta_k = c_k / (P D_i D_{i+1})`, each side of the interval
/// inequality rearranges to a single linear constraint on `P`; only the
/// side whose direction term `±(D_i - R_i D_{i+1})` is positive binds.
/// At `R_i = D_i/D_{i+1}` neither side binds and `Q` is infinite.
/// `i` is the zero-based index of the divisor pair `(D_i, D_{i+1})`.
pub fn quality(d: &BestSet, i: usize, r_i: &Rat, n: usize) -> Result<Quality> {
    if !r_i.is_positive() {
        return Err(Error::NonpositiveRatio);
    }
    if n < 2 {
        return Err(Error::InvalidParameter("quality requires n >= 2"));
    }
    if i + 1 >= d.len() || i + 1 >= n {
        return Err(Error::IndexOutOfRange);
    }
    let c_lo = slack_term(&d.divisors()[i], n);
    let c_hi = slack_term(&d.divisors()[i + 1], n);
    if c_lo.is_negative() || c_hi.is_negative() {
        return Err(Error::InfeasibleBounds);
    }
    let d_lo = Rat::from_integer(d.divisors()[i].clone());
    let d_hi = Rat::from_integer(d.divisors()[i + 1].clone());
    let numerator = &c_lo + &(r_i * &c_hi);
    let pair_product = &d_lo * &d_hi;
    let from_lower = &d_lo - &(r_i * &d_hi);
    let from_upper = &(r_i * &d_hi) - &d_lo;
    let mut best: Option<Rat> = None;
    for direction in [from_lower, from_upper] {
        if direction.is_positive() {
            let q = &numerator / &(&direction * &pair_product);
            best = Some(match best {
                None => q,
                Some(b) => b.min(q),
            });
        }
    }
    Ok(best.map_or(Quality::Infinite, Quality::Finite))
}

/// True iff `prod(D)/(D_i D_{i+1}) < Q(D_i, D_{i+1})` for every i;
/// agrees exactly with direct interval containment.
pub fn quality_certify(r: &RatioVector, d: &BestSet, n: usize) -> Result<bool> {
    if d.len() != n || r.len() + 1 != n {
        return Err(Error::LengthMismatch);
    }
    let product = Rat::from_integer(d.product());
    for i in 0..n - 1 {
        let pair = Rat::from_integer(&d.divisors()[i] * &d.divisors()[i + 1]);
        let p_actual = &product / &pair;
        match quality(d, i, &r.ratios()[i], n)? {
            Quality::Infinite => {}
            Quality::Finite(q) => {
                if p_actual >= q {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
