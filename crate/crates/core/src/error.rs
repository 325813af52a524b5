use thiserror::Error;

use crate::exact_math::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gaussian bracket is undefined for base 0")]
    ZeroBase,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("characteristic polynomial has non-integral coefficient {0}")]
    NonIntegralCoefficient(Rational),
    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("intersection array is empty")]
    EmptyArray,
    #[error("b has length {b} but c has length {c}")]
    LengthMismatch { b: usize, c: usize },
    #[error("intersection numbers must be positive, found {name}_{index} = {value}")]
    NonPositiveEntry { name: &'static str, index: usize, value: i64 },
    #[error("c_1 must equal 1, found {0}")]
    C1NotOne(i64),
    #[error("a_{index} = {value} is negative")]
    NegativeAi { index: usize, value: i64 },
    #[error("k_{index} = {value} is not a positive integer")]
    NonIntegralKi { index: usize, value: Rational },

    #[error("theta = {theta} is not an eigenvalue: terminal identity fails by {residual}")]
    TerminalIdentityFails { theta: Box<Rational>, residual: Box<Rational> },
    #[error("eigenvalue {0} is irrational")]
    IrrationalEigenvalue(String),
    #[error("diameter {0} is too large for exhaustive ordering search")]
    DiameterTooLargeForSearch(usize),
    #[error("classical formulas give non-integral {name}_{index} = {value}")]
    NonIntegralClassical { name: &'static str, index: usize, value: Rational },
    #[error("classical parameters need D >= 1 and b not in {{0, -1}}")]
    InvalidClassicalParameters,

    #[error("theta = {0} is not the E_1 eigenvalue of any Q-polynomial ordering")]
    NotQPolynomialAtTheta(Rational),
    #[error("equivalence violated: {0}")]
    InternalInconsistency(String),
    #[error("diameter {0} is outside the supported range 2..=8")]
    DiameterOutOfRange(usize),

    #[error("graph is disconnected")]
    Disconnected,
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for n = {n}")]
    BadIndex { index: usize, n: usize },
    #[error("malformed graph file at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not distance-regular: pair ({x}, {y}) at distance {i}: expected {expected:?}, found {found:?}")]
    NotDistanceRegular {
        x: usize,
        y: usize,
        i: usize,
        expected: (usize, usize, usize),
        found: (usize, usize, usize),
    },
    #[error("idempotent check failed: {0}")]
    IdempotencyFailed(String),
    #[error("graph has no 3-clique")]
    NoTriangles,
    #[error("exact matrix entry overflowed 64-bit storage")]
    Overflow,

    #[error("diameter {0} is not supported by this construction")]
    DiameterUnsupported(usize),
    #[error("code verification failed: {0}")]
    CodeVerificationFailed(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
