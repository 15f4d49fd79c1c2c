use std::fmt;

/// Errors raised by exact arithmetic and constant-term computations.
///
/// Every fallible operation in this crate returns one of these variants
/// instead of panicking, so callers can distinguish misuse (bad shapes,
/// out-of-range indices) from genuine arithmetic obstructions (division
/// that is not exact, evaluation at a pole).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Laurent division left a nonzero remainder.
    NonExactDivision,
    /// A fraction or divisor had a zero denominator.
    ZeroDenominator,
    /// Two polynomial operands live in rings with different variable counts.
    RingMismatch { left: usize, right: usize },
    /// An exponent vector or point does not match the ring's variable count.
    DimensionMismatch { expected: usize, got: usize },
    /// A Pochhammer argument must be a single monomial term.
    NotAMonomial,
    /// A composition or partition entry was negative.
    NegativePart { index: usize, value: i64 },
    /// Parts are not weakly decreasing, so the vector is not a partition.
    NotAPartition { index: usize },
    /// A variable or block index lies outside the valid range.
    IndexOutOfRange { index: usize, len: usize },
    /// Two sequences that must have equal sums (or equal lengths) do not.
    SizeMismatch,
    /// An input violates a structural precondition of the operation.
    BadShape(String),
    /// A scalar parameter lies outside the range the identity covers.
    RangeViolation(String),
    /// Evaluation hit a zero denominator at the chosen point.
    PoleAtPoint,
    /// A rational point had a zero coordinate; Laurent evaluation needs
    /// invertible values.
    ZeroCoordinate { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonExactDivision => write!(f, "division is not exact"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} variables vs {right}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotAMonomial => write!(f, "argument is not a single monomial"),
            Error::NegativePart { index, value } => {
                write!(f, "negative part {value} at index {index}")
            }
            Error::NotAPartition { index } => {
                write!(f, "parts increase at index {index}; not a partition")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::SizeMismatch => write!(f, "operands have mismatched sizes"),
            Error::BadShape(msg) => write!(f, "bad shape: {msg}"),
            Error::RangeViolation(msg) => write!(f, "parameter out of range: {msg}"),
            Error::PoleAtPoint => write!(f, "evaluation point hits a pole"),
            Error::ZeroCoordinate { index } => {
                write!(f, "coordinate {index} is zero; point must be invertible")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
