//! Crate-wide error type.

use std::fmt;

/// Errors reported by the matrix, closure, and design operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix entry was NaN or infinite.
    NonFinite { row: usize, col: usize },
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// An index fell outside `[0, n)`.
    IndexOutOfRange { index: usize, n: usize },
    /// An index set violated its invariants (size, range, duplicates).
    InvalidKSet(String),
    /// A matrix read from text was asymmetric beyond tolerance.
    Asymmetric { row: usize, col: usize, delta: f64 },
    /// The Jacobi eigensolver hit its sweep cap without converging.
    NoConvergence { sweeps: usize },
    /// `C(n, k)` exceeds the exact-enumeration cap.
    EnumerationCapExceeded { n: usize, k: usize, cap: u64 },
    /// A precondition on the operation's domain was violated.
    Domain(String),
    /// A block list failed the 2-design counting checks.
    InvalidDesign(String),
    /// Malformed text input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { row, col } => {
                write!(f, "non-finite entry at ({row}, {col})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for dimension {n}")
            }
            Error::InvalidKSet(msg) => write!(f, "invalid k-set: {msg}"),
            Error::Asymmetric { row, col, delta } => {
                write!(f, "asymmetric input at ({row}, {col}): |M_ij - M_ji| = {delta:e}")
            }
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver failed to converge within {sweeps} sweeps")
            }
            Error::EnumerationCapExceeded { n, k, cap } => {
                write!(
                    f,
                    "C({n}, {k}) exceeds the enumeration cap {cap}; use sampled membership"
                )
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidDesign(msg) => write!(f, "invalid 2-design: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
