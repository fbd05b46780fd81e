//! Exact-arithmetic engine for lonely-runner computations.
//!
//! For a vector of positive speeds `v = (v_1, ..., v_n)` on the unit
//! circle (plus one implicit stationary runner), this crate computes
//! the loneliness gap `sup_t min_i ||v_i t||` exactly, constructs CRT
//! lonely times for pairwise-coprime divisor sets together with the
//! perturbation radii and ratio intervals that certify whole
//! neighborhoods of velocity space as good, sums the certified ratio
//! volume, and provides level-set bisection along lines in velocity
//! space. All rational computation uses arbitrary-precision fractions;
//! nothing is rounded. Floating point appears only in the explicitly
//! heuristic time scan of [`boundary::float_lonely_time_search`].
//!
//! The crate is `no_std` compatible (`alloc` required); disable the
//! default `std` feature for embedded use. IO, serialization, and the
//! command-line frontend live in the companion `lonerun` crate.
//!
//! ```
//! use lonerun_core::gap::{classify, max_gap, ClassKind, VelocityVector};
//! use lonerun_core::rat::rat;
//!
//! // (1,5) has gap 1/2, yet its running supremum dwells at exactly
//! // 1/3 on [1/3, 7/15]: a pseudo-exact pair.
//! let v = VelocityVector::from_integers(&[1, 5])?;
//! assert_eq!(max_gap(&v).value, rat(1, 2));
//! let class = classify(&v);
//! assert_eq!(class.kind, ClassKind::PseudoExact);
//! assert_eq!(class.plateau_start, Some(rat(1, 3)));
//! # Ok::<(), lonerun_core::Error>(())
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod boundary;
pub mod crt;
pub mod error;
pub mod gap;
pub mod measure;
pub mod rat;
pub mod rng;

pub use boundary::{BisectOutcome, BisectStep, FloatSearchResult, LinePoint};
pub use crt::{BestSet, DeltaBounds, GoodCertificate, LonelyTime, Quality, RatioVector};
pub use error::Error;
pub use gap::{ClassKind, Classification, GapReport, Horizon, Method, VelocityVector};
pub use measure::{CoverageEstimate, VolumeTerm};
pub use rat::Rat;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
