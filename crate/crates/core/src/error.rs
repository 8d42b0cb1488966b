use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("zero denominator in coefficient at byte {pos}")]
    ZeroDenominator { pos: usize },
    #[error("variable lists do not match: {0}")]
    VariableMismatch(String),
    #[error("duplicate or reserved variable name `{0}`")]
    BadVariableName(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("degrees must be positive and sorted ascending")]
    UnsortedDegrees,
    #[error("degree {0} is below 2; reduce degree-one equations first")]
    DegreeBelowTwo(u32),
    #[error("invalid codimension: r = {r} equations in dimension n = {n}")]
    Codimension { n: usize, r: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("not in the maximal ideal: {0}")]
    NotInMaximalIdeal(&'static str),
    #[error("not singular at the origin: the polynomial has a term of degree at most one")]
    SmoothPoint,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("probe limits exceeded: {0}")]
    ProbeLimits(String),
    #[error("invalid blow-up center: {0}")]
    BadCenter(String),
    #[error("verification branch mismatch: {0}")]
    BranchMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
