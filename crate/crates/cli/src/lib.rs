//! IO companion to `lonerun-core`: canonical JSON/CSV/plain rendering,
//! JSON-lines caches with resume, the parallel coverage driver, and the
//! classification sweep used to hunt for pseudo-exact instances.
//!
//! Everything exact serializes fractions as `"p/q"` strings; floats
//! appear only in the float-search output. All output is byte-stable
//! across runs, platforms, and thread counts for identical inputs.

#![forbid(unsafe_code)]

pub mod cache;
pub mod coverage;
pub mod format;
pub mod sweep;
pub mod volume;

use std::fmt;

/// Errors surfaced by the frontend, split by exit code: usage problems
/// exit 2, domain errors exit 1.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] lonerun_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache: {0}")]
    Cache(String),
}

impl AppError {
    pub fn usage(msg: impl fmt::Display) -> Self {
        AppError::Usage(msg.to_string())
    }

    /// Machine-readable kind string for the JSON error object.
    pub fn kind(&self) -> &'static str {
        match self {
            AppError::Usage(_) => "Usage",
            AppError::Domain(e) => domain_kind(e),
            AppError::Io(_) => "Io",
            AppError::Cache(_) => "Cache",
        }
    }
}

fn domain_kind(e: &lonerun_core::Error) -> &'static str {
    use lonerun_core::Error::*;
    match e {
        EmptyVelocities => "EmptyVelocities",
        NonpositiveVelocity => "NonpositiveVelocity",
        NegativeTime => "NegativeTime",
        ZeroSteps => "ZeroSteps",
        NonpositiveHorizon => "NonpositiveHorizon",
        InvalidBestSet(_) => "InvalidBestSet",
        LengthMismatch => "LengthMismatch",
        InfeasibleBounds => "InfeasibleBounds",
        NonpositiveRatio => "NonpositiveRatio",
        IndexOutOfRange => "IndexOutOfRange",
        InvalidParameter(_) => "InvalidParameter",
        NoStraddle => "NoStraddle",
        LambdaOutOfRange => "LambdaOutOfRange",
        NonpositiveTolerance => "NonpositiveTolerance",
        ParseRational => "ParseRational",
    }
}

/// Parse a comma-separated list of exact fractions.
pub fn parse_rat_list(s: &str) -> Result<Vec<lonerun_core::Rat>, AppError> {
    s.split(',')
        .map(|part| {
            lonerun_core::rat::parse_rat(part)
                .map_err(|_| AppError::usage(format!("cannot parse fraction {part:?}")))
        })
        .collect()
}

/// Parse a comma-separated list of unsigned integers.
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>, AppError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| AppError::usage(format!("cannot parse integer {part:?}")))
        })
        .collect()
}
