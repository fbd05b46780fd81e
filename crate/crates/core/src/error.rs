//! Error type shared by all modules.

use core::fmt;

/// Domain errors. Every operation validates its inputs exactly; there
/// are no silent fallbacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A velocity vector must contain at least one runner.
    EmptyVelocities,
    /// Velocities must be strictly positive.
    NonpositiveVelocity,
    /// Gap evaluation requires `t >= 0`.
    NegativeTime,
    /// The grid oracle requires at least one step.
    ZeroSteps,
    /// Finite-horizon operations require `T1 > 0`.
    NonpositiveHorizon,
    /// Divisor-set invariant violated (the message names which one).
    InvalidBestSet(&'static str),
    /// Two arguments that must have matching dimensions do not.
    LengthMismatch,
    /// The perturbation bounds have negative slack; the requested
    /// operation is only defined for feasible bounds.
    InfeasibleBounds,
    /// Velocity ratios must be strictly positive.
    NonpositiveRatio,
    /// Ratio index out of range for the divisor set.
    IndexOutOfRange,
    /// A numeric parameter is outside its documented domain.
    InvalidParameter(&'static str),
    /// Bisection endpoints do not straddle the target level.
    NoStraddle,
    /// Line parameters must satisfy `0 <= lambda <= 1`.
    LambdaOutOfRange,
    /// Bisection tolerance must be strictly positive.
    NonpositiveTolerance,
    /// Could not parse a fraction from the given string.
    ParseRational,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyVelocities => write!(f, "velocity vector is empty"),
            Error::NonpositiveVelocity => write!(f, "velocities must be strictly positive"),
            Error::NegativeTime => write!(f, "time must be nonnegative"),
            Error::ZeroSteps => write!(f, "grid oracle requires steps >= 1"),
            Error::NonpositiveHorizon => write!(f, "horizon must be strictly positive"),
            Error::InvalidBestSet(why) => write!(f, "invalid divisor set: {why}"),
            Error::LengthMismatch => write!(f, "argument dimensions do not match"),
            Error::InfeasibleBounds => write!(f, "perturbation bounds are infeasible"),
            Error::NonpositiveRatio => write!(f, "ratios must be strictly positive"),
            Error::IndexOutOfRange => write!(f, "ratio index out of range"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::NoStraddle => write!(f, "endpoint gaps do not straddle the target level"),
            Error::LambdaOutOfRange => write!(f, "lambda must lie in [0, 1]"),
            Error::NonpositiveTolerance => write!(f, "tolerance must be strictly positive"),
            Error::ParseRational => write!(f, "expected an integer or a fraction \"p/q\""),
        }
    }
}

impl core::error::Error for Error {}
