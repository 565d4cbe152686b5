//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by semifield, matrix and search operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different semifield instances.
    DomainMismatch { left: String, right: String },
    /// Multiplicative inverse of the additive zero was requested.
    NoInverse,
    /// Two vectors (or a form and a vector) have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Matrix shapes are incompatible for the requested operation.
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// The input exceeds the enumeration bound for this operation.
    SizeLimit {
        op: &'static str,
        size: usize,
        limit: usize,
    },
    /// The matrix has no monomial inverse.
    NotMonomial,
    /// The operation does not apply to this input (e.g. characteristic 0).
    NotApplicable(String),
    /// The semifield instance does not support this operation.
    UnsupportedSemifield(String),
    /// Two elements were incomparable under the natural order.
    OrderNotTotal,
    /// An instance failed its construction-time validation.
    Construction(String),
    /// The bounded witness search completed without finding a witness.
    WitnessSearchExhausted,
    /// A search budget cap was hit before the sweep could complete.
    BudgetExhausted(String),
    /// A documented precondition does not hold for the input.
    Precondition(String),
    /// Input data could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainMismatch { left, right } => {
                write!(f, "semifield mismatch: {left} vs {right}")
            }
            Error::NoInverse => write!(f, "the additive zero has no multiplicative inverse"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::DimensionMismatch { op, left, right } => write!(
                f,
                "{op}: incompatible dimensions {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            Error::SizeLimit { op, size, limit } => {
                write!(f, "{op}: size {size} exceeds the enumeration limit {limit}")
            }
            Error::NotMonomial => write!(f, "matrix is not monomial, no inverse exists"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
            Error::UnsupportedSemifield(msg) => write!(f, "unsupported semifield: {msg}"),
            Error::OrderNotTotal => write!(f, "elements are incomparable in the natural order"),
            Error::Construction(msg) => write!(f, "construction failed: {msg}"),
            Error::WitnessSearchExhausted => {
                write!(f, "witness search exhausted its bounds without a witness")
            }
            Error::BudgetExhausted(msg) => write!(f, "search budget exhausted: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
