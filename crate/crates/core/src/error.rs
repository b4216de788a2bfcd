use thiserror::Error;

/// Errors produced by the arithmetic, code construction and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree m = {0} is outside the supported range 1..=8")]
    UnsupportedDegree(u32),
    #[error("field element {bits} is not valid for GF(2^{m})")]
    InvalidElement { bits: u32, m: u32 },
    #[error("division by zero in GF(2^m)")]
    DivisionByZero,
    #[error("no trace-orthogonal basis found for m = {0}")]
    NotFound(u32),
    #[error("{0} is not a unit of the chain ring")]
    NotAUnit(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("leading coefficient {0} of the divisor is not a unit")]
    NonUnitLeadingCoeff(String),
    #[error("constant term {0} is not a unit; the reciprocal is undefined")]
    NonUnitConstantTerm(String),
    #[error("length n = {0} is even; only odd lengths are supported")]
    EvenLength(usize),
    #[error("{0} does not divide x^{1} - 1")]
    NotAFactor(String, usize),
    #[error("f*g*h = {product} is not x^{n} - (1+u)")]
    BadFactorization { product: String, n: usize },
    #[error("{first} and {second} are not coprime (common factor {common})")]
    NotCoprime {
        first: String,
        second: String,
        common: String,
    },
    #[error("{0} is not monic")]
    NotMonic(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("bit word of length {len} cannot be split into 2n blocks of {m} bits")]
    BadBlocking { len: usize, m: usize },
    #[error("generator rank {actual} differs from the expected {expected}")]
    RankMismatch { expected: usize, actual: usize },
    #[error("code has {size} codewords, above the enumeration limit {limit}")]
    TooLarge { size: String, limit: u128 },
    #[error("the code has no nonzero codewords")]
    ZeroCode,
    #[error("code is not dual-containing: f = {f} does not divide g* = {g_star}")]
    NotDualContaining { f: String, g_star: String },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
