//! Crate-wide error type.

use core::fmt;

/// Errors reported by the library.
///
/// Everything desk-scale is total; errors are reserved for dimension
/// mismatches, enumeration guards, and preconditions that a caller can
/// legitimately fail to meet (odd `m` for the union family, folding a graph
/// that is not antipodal, and so on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or permutation had the wrong length for the operation.
    Dimension { expected: usize, got: usize },
    /// An enumeration guard was exceeded; `value` and `limit` are in the
    /// units named by `what` (bits of redundancy, vertices, ...).
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// A parameter is outside the domain of the operation (e.g. `m < 3`).
    InvalidParameter(&'static str),
    /// A structural precondition does not hold for this input (e.g. the
    /// covering set is not a single coset, or a graph is not antipodal).
    NotApplicable(&'static str),
    /// A supplied permutation is not an automorphism of the code or graph.
    NotAutomorphism(&'static str),
    /// The graph is disconnected where a connected one is required.
    Disconnected,
    /// Integer arithmetic left the supported range.
    Overflow(&'static str),
    /// An internal cross-validation failed; indicates a bug, not bad input.
    SelfCheckFailed(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::TooLarge { what, value, limit } => {
                write!(f, "too large to enumerate: {what} is {value}, limit {limit}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
            Error::NotAutomorphism(msg) => write!(f, "not an automorphism: {msg}"),
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::Overflow(msg) => write!(f, "integer overflow: {msg}"),
            Error::SelfCheckFailed(msg) => write!(f, "internal self-check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
