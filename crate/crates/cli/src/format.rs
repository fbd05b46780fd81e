//! Canonical output documents and their three renderings.
//!
//! Field order in the JSON form is the struct declaration order below
//! and is part of the interface; fractions are always `"p/q"` strings.
//! CSV quotes nothing (no field ever contains a comma: list-valued
//! fields join with `;`), and plain is one `key: value` line per field.

use lonerun_core::boundary::BisectOutcome;
use lonerun_core::crt::{in_band, BestSet, DeltaBounds, GoodCertificate, LonelyTime};
use lonerun_core::gap::{ClassKind, Classification, GapReport, Horizon, Method};
use lonerun_core::measure::{CoverageEstimate, VolumeTerm, COVERAGE_GENERATOR};
use lonerun_core::rat::{parse_rat, to_pq_string, Rat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::AppError;

/// Output rendering selected with `--output`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

/// A document renderable in all three output formats.
pub trait Render: Serialize {
    fn plain(&self) -> String;
    fn csv(&self) -> String;

    fn json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize infallibly")
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.json(),
            OutputFormat::Csv => self.csv(),
            OutputFormat::Plain => self.plain(),
        }
    }
}

fn rats(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(to_pq_string).collect()
}

fn parse_rats(xs: &[String]) -> Result<Vec<Rat>, AppError> {
    xs.iter()
        .map(|s| parse_rat(s).map_err(AppError::from))
        .collect()
}

fn bigs_to_u64(xs: &[BigInt]) -> Result<Vec<u64>, AppError> {
    xs.iter()
        .map(|x| {
            x.to_u64()
                .ok_or_else(|| AppError::Cache("integer exceeds u64 in output".into()))
        })
        .collect()
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ExactSweep => "ExactSweep",
        Method::GridOracle => "GridOracle",
    }
}

pub fn kind_name(k: ClassKind) -> &'static str {
    match k {
        ClassKind::Exact => "Exact",
        ClassKind::PseudoExact => "PseudoExact",
        ClassKind::GapExceedsBound => "GapExceedsBound",
        ClassKind::GapBelowBound => "GapBelowBound",
    }
}

fn opt(v: &Option<String>) -> &str {
    v.as_deref().unwrap_or("-")
}

// ---------------------------------------------------------------------------
// gap / maxgap

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapValueDoc {
    pub value: String,
}

impl GapValueDoc {
    pub fn new(value: &Rat) -> Self {
        GapValueDoc {
            value: to_pq_string(value),
        }
    }
}

impl Render for GapValueDoc {
    fn plain(&self) -> String {
        self.value.clone()
    }
    fn csv(&self) -> String {
        format!("value\n{}", self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReportDoc {
    pub value: String,
    pub witness: String,
    /// `None` means the unbounded supremum.
    pub horizon: Option<String>,
    pub method: String,
}

impl From<&GapReport> for GapReportDoc {
    fn from(r: &GapReport) -> Self {
        GapReportDoc {
            value: to_pq_string(&r.value),
            witness: to_pq_string(&r.witness_time),
            horizon: match &r.horizon {
                Horizon::Unbounded => None,
                Horizon::Bounded(t) => Some(to_pq_string(t)),
            },
            method: method_name(r.method).to_string(),
        }
    }
}

impl GapReportDoc {
    /// Reconstruct the exact report; used to verify round-trip fidelity.
    pub fn to_core(&self) -> Result<GapReport, AppError> {
        Ok(GapReport {
            value: parse_rat(&self.value)?,
            witness_time: parse_rat(&self.witness)?,
            horizon: match &self.horizon {
                None => Horizon::Unbounded,
                Some(t) => Horizon::Bounded(parse_rat(t)?),
            },
            method: match self.method.as_str() {
                "ExactSweep" => Method::ExactSweep,
                "GridOracle" => Method::GridOracle,
                other => return Err(AppError::Cache(format!("unknown method {other:?}"))),
            },
        })
    }
}

impl Render for GapReportDoc {
    fn plain(&self) -> String {
        format!(
            "value: {}\nwitness: {}\nhorizon: {}\nmethod: {}",
            self.value,
            self.witness,
            opt(&self.horizon),
            self.method
        )
    }
    fn csv(&self) -> String {
        format!(
            "value,witness,horizon,method\n{},{},{},{}",
            self.value,
            self.witness,
            opt(&self.horizon),
            self.method
        )
    }
}

// ---------------------------------------------------------------------------
// classify

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub kind: String,
    pub gap: String,
    pub witness: String,
    pub bound: String,
    pub plateau_start: Option<String>,
    pub plateau_length: Option<String>,
    pub counterexample: bool,
}

impl ClassificationDoc {
    pub fn new(c: &Classification, report: &GapReport, n: usize) -> Self {
        ClassificationDoc {
            kind: kind_name(c.kind).to_string(),
            gap: to_pq_string(&report.value),
            witness: to_pq_string(&report.witness_time),
            bound: to_pq_string(&lonerun_core::gap::loneliness_bound(n)),
            plateau_start: c.plateau_start.as_ref().map(to_pq_string),
            plateau_length: c.plateau_length.as_ref().map(to_pq_string),
            counterexample: c.kind == ClassKind::GapBelowBound,
        }
    }
}

impl Render for ClassificationDoc {
    fn plain(&self) -> String {
        format!(
            "kind: {}\ngap: {}\nwitness: {}\nbound: {}\nplateau_start: {}\nplateau_length: {}",
            self.kind,
            self.gap,
            self.witness,
            self.bound,
            opt(&self.plateau_start),
            opt(&self.plateau_length)
        )
    }
    fn csv(&self) -> String {
        format!(
            "kind,gap,witness,bound,plateau_start,plateau_length,counterexample\n{},{},{},{},{},{},{}",
            self.kind,
            self.gap,
            self.witness,
            self.bound,
            opt(&self.plateau_start),
            opt(&self.plateau_length),
            self.counterexample
        )
    }
}

// ---------------------------------------------------------------------------
// crt

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalDoc {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrtDoc {
    pub d: Vec<u64>,
    pub n: usize,
    pub t: u128,
    pub residues: Vec<u64>,
    pub positions: Vec<String>,
    pub in_band: Vec<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_intervals: Option<Vec<IntervalDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub box_contains: Option<bool>,
}

impl CrtDoc {
    pub fn new(d: &BestSet, n: usize, lt: &LonelyTime) -> Result<Self, AppError> {
        Ok(CrtDoc {
            d: bigs_to_u64(d.divisors())?,
            n,
            t: lt
                .t
                .to_u128()
                .ok_or_else(|| AppError::Cache("CRT time exceeds u128 in output".into()))?,
            residues: bigs_to_u64(&lt.residues)?,
            positions: rats(&lt.positions),
            in_band: lt.positions.iter().map(|x| in_band(x, n)).collect(),
            feasible: None,
            slack: None,
            delta: None,
            ratio_intervals: None,
            box_contains: None,
        })
    }

    pub fn with_bounds(mut self, bounds: &DeltaBounds) -> Self {
        self.feasible = Some(bounds.feasible);
        self.slack = Some(rats(&bounds.slack));
        self.delta = Some(rats(&bounds.delta));
        self
    }

    pub fn with_intervals(mut self, intervals: &[(Rat, Rat)]) -> Self {
        self.ratio_intervals = Some(
            intervals
                .iter()
                .map(|(lo, hi)| IntervalDoc {
                    lo: to_pq_string(lo),
                    hi: to_pq_string(hi),
                })
                .collect(),
        );
        self
    }
}

fn join_u64(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

fn join_bool(xs: &[bool]) -> String {
    xs.iter().map(bool::to_string).collect::<Vec<_>>().join(";")
}

impl Render for CrtDoc {
    fn plain(&self) -> String {
        let mut out = format!(
            "d: {}\nn: {}\nt: {}\nresidues: {}\npositions: {}\nin_band: {}",
            join_u64(&self.d),
            self.n,
            self.t,
            join_u64(&self.residues),
            self.positions.join(";"),
            join_bool(&self.in_band)
        );
        if let Some(f) = self.feasible {
            out.push_str(&format!("\nfeasible: {f}"));
        }
        if let Some(s) = &self.slack {
            out.push_str(&format!("\nslack: {}", s.join(";")));
        }
        if let Some(d) = &self.delta {
            out.push_str(&format!("\ndelta: {}", d.join(";")));
        }
        if let Some(iv) = &self.ratio_intervals {
            let body: Vec<String> = iv.iter().map(|i| format!("({},{})", i.lo, i.hi)).collect();
            out.push_str(&format!("\nratio_intervals: {}", body.join(";")));
        }
        if let Some(b) = self.box_contains {
            out.push_str(&format!("\nbox_contains: {b}"));
        }
        out
    }
    fn csv(&self) -> String {
        format!(
            "d,n,t,residues,positions,in_band\n{},{},{},{},{},{}",
            join_u64(&self.d),
            self.n,
            self.t,
            join_u64(&self.residues),
            self.positions.join(";"),
            join_bool(&self.in_band)
        )
    }
}

// ---------------------------------------------------------------------------
// certify

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub d: Vec<u64>,
    pub n: usize,
    pub t: u128,
    pub residues: Vec<u64>,
    pub positions: Vec<String>,
    pub slack: Vec<String>,
    pub delta: Vec<String>,
    pub feasible: bool,
    pub ratio_intervals: Vec<IntervalDoc>,
    pub scale_witness: Option<String>,
}

impl CertificateDoc {
    pub fn new(cert: &GoodCertificate) -> Result<Self, AppError> {
        Ok(CertificateDoc {
            d: bigs_to_u64(cert.best_set.divisors())?,
            n: cert.best_set.len(),
            t: cert
                .lonely_time
                .t
                .to_u128()
                .ok_or_else(|| AppError::Cache("CRT time exceeds u128 in output".into()))?,
            residues: bigs_to_u64(&cert.lonely_time.residues)?,
            positions: rats(&cert.lonely_time.positions),
            slack: rats(&cert.bounds.slack),
            delta: rats(&cert.bounds.delta),
            feasible: cert.bounds.feasible,
            ratio_intervals: cert
                .ratio_intervals
                .iter()
                .map(|(lo, hi)| IntervalDoc {
                    lo: to_pq_string(lo),
                    hi: to_pq_string(hi),
                })
                .collect(),
            scale_witness: cert.scale_witness.as_ref().map(to_pq_string),
        })
    }

    /// Rebuild the exact certificate this document encodes.
    pub fn to_core(&self) -> Result<GoodCertificate, AppError> {
        let best_set = BestSet::from_u64s(&self.d)?;
        let lonely_time = LonelyTime {
            t: BigInt::from(self.t),
            residues: self.residues.iter().map(|&x| BigInt::from(x)).collect(),
            positions: parse_rats(&self.positions)?,
        };
        let bounds = DeltaBounds {
            slack: parse_rats(&self.slack)?,
            delta: parse_rats(&self.delta)?,
            feasible: self.feasible,
        };
        let ratio_intervals = self
            .ratio_intervals
            .iter()
            .map(|iv| Ok((parse_rat(&iv.lo)?, parse_rat(&iv.hi)?)))
            .collect::<Result<Vec<_>, AppError>>()?;
        let scale_witness = self.scale_witness.as_deref().map(parse_rat).transpose()?;
        Ok(GoodCertificate {
            best_set,
            lonely_time,
            bounds,
            ratio_intervals,
            scale_witness,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyDoc {
    pub found: bool,
    pub d_max: u64,
    pub r: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
}

impl Render for CertifyDoc {
    fn plain(&self) -> String {
        match &self.certificate {
            None => format!("found: false (d_max {})", self.d_max),
            Some(c) => format!(
                "found: true\nd: {}\nt: {}\nscale_witness: {}",
                join_u64(&c.d),
                c.t,
                c.scale_witness.as_deref().unwrap_or("-")
            ),
        }
    }
    fn csv(&self) -> String {
        match &self.certificate {
            None => "found,d,t,scale_witness\nfalse,,,".to_string(),
            Some(c) => format!(
                "found,d,t,scale_witness\ntrue,{},{},{}",
                join_u64(&c.d),
                c.t,
                c.scale_witness.as_deref().unwrap_or("")
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// quality

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityDoc {
    pub d: Vec<u64>,
    pub n: usize,
    /// One-based index of the divisor pair.
    pub i: usize,
    pub r: String,
    /// `"p/q"` or `"inf"`.
    pub q: String,
}

impl Render for QualityDoc {
    fn plain(&self) -> String {
        format!("q: {}", self.q)
    }
    fn csv(&self) -> String {
        format!(
            "d,n,i,r,q\n{},{},{},{},{}",
            join_u64(&self.d),
            self.n,
            self.i,
            self.r,
            self.q
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityVectorDoc {
    pub d: Vec<u64>,
    pub n: usize,
    pub r: Vec<String>,
    pub q: Vec<String>,
    /// Actual products `prod(D)/(D_i D_{i+1})`, one per pair.
    pub p_actual: Vec<String>,
    pub certified: bool,
}

impl Render for QualityVectorDoc {
    fn plain(&self) -> String {
        format!(
            "q: {}\np_actual: {}\ncertified: {}",
            self.q.join(";"),
            self.p_actual.join(";"),
            self.certified
        )
    }
    fn csv(&self) -> String {
        format!(
            "d,n,r,q,p_actual,certified\n{},{},{},{},{},{}",
            join_u64(&self.d),
            self.n,
            self.r.join(";"),
            self.q.join(";"),
            self.p_actual.join(";"),
            self.certified
        )
    }
}

// ---------------------------------------------------------------------------
// volume

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeTermDoc {
    pub d: Vec<u64>,
    pub n: usize,
    pub widths: Vec<String>,
    pub term: String,
    /// Widths recomputed with the minus-sign numerator variant, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus_widths: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus_matches: Option<bool>,
}

impl VolumeTermDoc {
    pub fn new(term: &VolumeTerm, n: usize) -> Result<Self, AppError> {
        Ok(VolumeTermDoc {
            d: bigs_to_u64(term.best_set.divisors())?,
            n,
            widths: rats(&term.widths),
            term: to_pq_string(&term.term),
            minus_widths: None,
            minus_matches: None,
        })
    }
}

impl Render for VolumeTermDoc {
    fn plain(&self) -> String {
        let mut out = format!("widths: {}\nterm: {}", self.widths.join(";"), self.term);
        if let Some(m) = &self.minus_widths {
            out.push_str(&format!("\nminus_widths: {}", m.join(";")));
        }
        if let Some(eq) = self.minus_matches {
            out.push_str(&format!("\nminus_matches: {eq}"));
        }
        out
    }
    fn csv(&self) -> String {
        format!(
            "d,n,widths,term\n{},{},{},{}",
            join_u64(&self.d),
            self.n,
            self.widths.join(";"),
            self.term
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeSumDoc {
    pub n: usize,
    pub d_max: u64,
    pub sets: u64,
    pub sum_terms: String,
    pub factor: String,
    pub scaled_sum: String,
    /// The sum is diagnostic: certified regions of different divisor
    /// sets may overlap and no normalization is applied.
    pub heuristic: bool,
    pub note: String,
}

impl Render for VolumeSumDoc {
    fn plain(&self) -> String {
        format!(
            "n: {}\nd_max: {}\nsets: {}\nsum_terms: {}\nfactor: {}\nscaled_sum: {}\nheuristic: {}",
            self.n,
            self.d_max,
            self.sets,
            self.sum_terms,
            self.factor,
            self.scaled_sum,
            self.heuristic
        )
    }
    fn csv(&self) -> String {
        format!(
            "n,d_max,sets,sum_terms,factor,scaled_sum,heuristic\n{},{},{},{},{},{},{}",
            self.n,
            self.d_max,
            self.sets,
            self.sum_terms,
            self.factor,
            self.scaled_sum,
            self.heuristic
        )
    }
}

// ---------------------------------------------------------------------------
// coverage

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageDoc {
    pub n: usize,
    pub d_max: u64,
    pub samples: u64,
    pub hits: u64,
    pub fraction: String,
    pub seed: u64,
    pub generator: String,
    pub ratio_low: String,
    pub ratio_high: String,
}

impl CoverageDoc {
    pub fn new(est: &CoverageEstimate, low: &Rat, high: &Rat) -> Self {
        CoverageDoc {
            n: est.n,
            d_max: est.d_max,
            samples: est.sample_count,
            hits: est.hits,
            fraction: to_pq_string(&est.fraction),
            seed: est.seed,
            generator: COVERAGE_GENERATOR.to_string(),
            ratio_low: to_pq_string(low),
            ratio_high: to_pq_string(high),
        }
    }
}

impl Render for CoverageDoc {
    fn plain(&self) -> String {
        format!(
            "samples: {}\nhits: {}\nfraction: {}\nseed: {}\ngenerator: {}",
            self.samples, self.hits, self.fraction, self.seed, self.generator
        )
    }
    fn csv(&self) -> String {
        format!(
            "n,d_max,samples,hits,fraction,seed,generator,ratio_low,ratio_high\n{},{},{},{},{},{},{},{},{}",
            self.n,
            self.d_max,
            self.samples,
            self.hits,
            self.fraction,
            self.seed,
            self.generator,
            self.ratio_low,
            self.ratio_high
        )
    }
}

// ---------------------------------------------------------------------------
// bisect / floatsearch

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisectDoc {
    pub lambda: String,
    pub point: Vec<String>,
    pub gap: String,
    pub target: String,
    pub tol: String,
    pub iterations: u32,
    pub converged: bool,
}

impl BisectDoc {
    pub fn new(out: &BisectOutcome, target: &Rat, tol: &Rat) -> Self {
        BisectDoc {
            lambda: to_pq_string(&out.point.lambda),
            point: rats(out.point.point.components()),
            gap: to_pq_string(&out.gap),
            target: to_pq_string(target),
            tol: to_pq_string(tol),
            iterations: out.iterations,
            converged: out.converged,
        }
    }
}

impl Render for BisectDoc {
    fn plain(&self) -> String {
        format!(
            "lambda: {}\npoint: {}\ngap: {}\ntarget: {}\niterations: {}\nconverged: {}",
            self.lambda,
            self.point.join(";"),
            self.gap,
            self.target,
            self.iterations,
            self.converged
        )
    }
    fn csv(&self) -> String {
        format!(
            "lambda,point,gap,target,tol,iterations,converged\n{},{},{},{},{},{},{}",
            self.lambda,
            self.point.join(";"),
            self.gap,
            self.target,
            self.tol,
            self.iterations,
            self.converged
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloatSearchDoc {
    pub found: bool,
    pub time: Option<f64>,
    pub min_gap: Option<f64>,
    pub epsilon: f64,
    pub steps_taken: Option<u64>,
}

impl Render for FloatSearchDoc {
    fn plain(&self) -> String {
        match (self.time, self.min_gap, self.steps_taken) {
            (Some(t), Some(g), Some(s)) => format!("time: {t}\nmin_gap: {g}\nsteps_taken: {s}"),
            _ => "found: false".to_string(),
        }
    }
    fn csv(&self) -> String {
        format!(
            "found,time,min_gap,epsilon,steps_taken\n{},{},{},{},{}",
            self.found,
            self.time.map(|t| t.to_string()).unwrap_or_default(),
            self.min_gap.map(|g| g.to_string()).unwrap_or_default(),
            self.epsilon,
            self.steps_taken.map(|s| s.to_string()).unwrap_or_default(),
        )
    }
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResultDoc {
    pub kind: String,
    pub gap: String,
    pub witness: String,
    pub plateau_start: Option<String>,
    pub plateau_length: Option<String>,
}

/// One cache line of the sweep: keyed by the sorted component string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecordDoc {
    pub key: String,
    pub input: Vec<u64>,
    pub result: SweepResultDoc,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummaryDoc {
    pub n: usize,
    pub v_max: u64,
    pub total: u64,
    pub computed: u64,
    pub from_cache: u64,
    pub exact: u64,
    pub pseudo_exact: u64,
    pub gap_exceeds_bound: u64,
    pub gap_below_bound: u64,
    pub cache: Option<String>,
}

impl Render for SweepSummaryDoc {
    fn plain(&self) -> String {
        format!(
            "total: {}\ncomputed: {}\nfrom_cache: {}\nExact: {}\nPseudoExact: {}\nGapExceedsBound: {}\nGapBelowBound: {}",
            self.total,
            self.computed,
            self.from_cache,
            self.exact,
            self.pseudo_exact,
            self.gap_exceeds_bound,
            self.gap_below_bound
        )
    }
    fn csv(&self) -> String {
        format!(
            "n,v_max,total,computed,from_cache,exact,pseudo_exact,gap_exceeds_bound,gap_below_bound\n{},{},{},{},{},{},{},{},{}",
            self.n,
            self.v_max,
            self.total,
            self.computed,
            self.from_cache,
            self.exact,
            self.pseudo_exact,
            self.gap_exceeds_bound,
            self.gap_below_bound
        )
    }
}

// ---------------------------------------------------------------------------
// volume checkpoint records

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeHeaderDoc {
    pub kind: String,
    pub n: usize,
    pub d_max: u64,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeRecordDoc {
    pub d: Vec<u64>,
    pub term: String,
    pub cumulative: String,
}

// ---------------------------------------------------------------------------
// errors

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

impl ErrorDoc {
    pub fn new(err: &AppError) -> Self {
        ErrorDoc {
            error: ErrorBody {
                kind: err.kind().to_string(),
                message: err.to_string(),
            },
        }
    }
}

impl Render for ErrorDoc {
    fn plain(&self) -> String {
        format!("error ({}): {}", self.error.kind, self.error.message)
    }
    fn csv(&self) -> String {
        format!("kind,message\n{},{}", self.error.kind, self.error.message)
    }
}
