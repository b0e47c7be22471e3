//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong short of a programming error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A modular inverse was requested for non-coprime arguments.
    #[error("not coprime: gcd({a}, {m}) != 1")]
    NotCoprime { a: i64, m: i64 },
    /// A series operation was applied to a series with the wrong constant term.
    #[error("series precondition violated: constant term is {term}")]
    PreconditionViolated { term: String },
    /// Two constant sequences of different lengths were combined.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// A homogeneous product H_r was requested beyond the available constants.
    #[error("need {needed} sequence constants, have {have}")]
    InsufficientConstants { needed: usize, have: usize },
    /// The number of degrees does not match the declared order of a
    /// generalised Bernoulli/Euler function.
    #[error("degree count {got} does not match declared order {expected}")]
    ArityMismatch { expected: usize, got: usize },
    /// Degrees were empty or contained a zero entry.
    #[error("invalid degrees: {0}")]
    InvalidDegrees(String),
    /// The tiling name is not in the catalog.
    #[error("unknown tiling: {0}")]
    UnknownTiling(String),
    /// An axis-order computation was requested for a tiling without axis data.
    #[error("tiling has no axis orders")]
    MissingAxisOrders,
    /// The reference midpoint combination only exists in dimensions 2 and 3.
    #[error("reference combination unsupported in dimension {0}")]
    DimensionUnsupported(usize),
    /// A Frobenius number was requested with a degree equal to 1.
    #[error("degree {0} is 1: every level is representable")]
    DegenerateDegree(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
