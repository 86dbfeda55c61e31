//! Error types shared across the crate.

use std::fmt;

/// A syntax error produced by the expression parser.
///
/// `pos` is a byte offset into the original input string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Everything that can go wrong in the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero scalar, or a fraction with zero denominator.
    DivisionByZero,
    /// A concrete q was 0, 1 or -1, where the quantized formulas degenerate.
    DegenerateParameter(String),
    /// Evaluation hit a denominator that vanishes at the given point.
    DenominatorVanishes,
    /// quantum_factorial of a negative integer.
    NegativeFactorial(i64),
    /// An operation that needs a nonzero element was handed zero.
    ZeroElement,
    /// The element is not a polynomial in the Casimir element.
    NotInCasimir,
    /// An automorphism descriptor was built with lambda = 0.
    ZeroLambda,
    /// Family tag outside 1..=4.
    BadFamily(u8),
    /// Generator images do not match any of the four automorphism shapes.
    NotAutomorphismShape(String),
    /// A module's E/F matrices violate the one-off-diagonal sparsity pattern.
    SparsityViolated(String),
    /// Twisting produced a K-action without the expected eigenvalue ladder.
    InvalidTwist(String),
    /// Lambda cannot be expressed in the target coefficient field.
    TransportUnrepresentable,
    /// affine_match was handed sequences it cannot decide (e.g. both constant).
    DegenerateSequence,
    /// Sequence or dimension lengths disagree.
    LengthMismatch(usize, usize),
    /// Fewer data points than the operation needs.
    SequenceTooShort(usize),
    /// Division of algebra elements (only scalars divide).
    AlgebraDivision,
    /// An exponent beyond the supported range.
    ExponentTooLarge(i64),
    /// Negative power of a non-invertible element.
    NotInvertible(String),
    /// An expression that was required to be scalar is not.
    NotScalar(String),
    /// Expression syntax error.
    Parse(ParseError),
    /// An internal cross-check failed; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DegenerateParameter(s) => {
                write!(f, "degenerate parameter (root of unity or zero): q = {s}")
            }
            Error::DenominatorVanishes => write!(f, "denominator vanishes at the given point"),
            Error::NegativeFactorial(n) => write!(f, "quantum factorial of negative integer {n}"),
            Error::ZeroElement => write!(f, "the zero element has no leading term"),
            Error::NotInCasimir => write!(f, "element is not a polynomial in the Casimir element"),
            Error::ZeroLambda => write!(f, "automorphism parameter lambda must be nonzero"),
            Error::BadFamily(n) => write!(f, "automorphism family must be 1, 2, 3 or 4 (got {n})"),
            Error::NotAutomorphismShape(s) => {
                write!(f, "generator images do not match an automorphism family: {s}")
            }
            Error::SparsityViolated(s) => write!(f, "ladder sparsity pattern violated: {s}"),
            Error::InvalidTwist(s) => write!(f, "twist produced an invalid module: {s}"),
            Error::TransportUnrepresentable => {
                write!(f, "lambda mentions q and cannot move to the target coefficient field")
            }
            Error::DegenerateSequence => write!(f, "degenerate sequence: affine match undetermined"),
            Error::LengthMismatch(a, b) => write!(f, "length mismatch: {a} vs {b}"),
            Error::SequenceTooShort(n) => {
                write!(f, "need at least 3 data points, got {n}")
            }
            Error::AlgebraDivision => {
                write!(f, "division is only defined by scalar expressions")
            }
            Error::ExponentTooLarge(e) => write!(f, "exponent {e} out of supported range"),
            Error::NotInvertible(s) => write!(f, "{s} is not invertible"),
            Error::NotScalar(s) => write!(f, "expected a scalar expression, got {s}"),
            Error::Parse(e) => write!(f, "{e}"),
            Error::Internal(s) => write!(f, "internal invariant violated: {s}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
