use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the library. Checkers report violations through
/// [`crate::report::Report`] instead; an `Error` means the inputs were
/// malformed, not that an identity failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalars come from different rings: {0} vs {1}")]
    MixedRings(String, String),
    #[error("{0} is not a unit in {1}")]
    NonUnit(String, String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(String),
    #[error("cannot parse {0:?} as an element of {1}")]
    BadScalar(String, String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: i64, got: i64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("arity {0} out of range 1..={1}")]
    ArityOutOfRange(usize, usize),
    #[error("operation defined only in degree 0, got degree {0}")]
    NonzeroDegree(i64),
    #[error("element not homogeneous: degrees {0} and {1} both occur")]
    NotHomogeneous(i64, i64),
    #[error("not strictly unital: offending word [{}] at arity {arity}", word.join("|"))]
    NotStrictlyUnital { arity: usize, word: Vec<String> },
    #[error("not a Maurer-Cartan element: {0} violation(s) up to arity {1}")]
    NotMaurerCartan(usize, usize),
    #[error("Shamash system has sigma^{0} != 0; matrix factorizations need sigma^n = 0 for n >= 2")]
    HigherSigmaNonzero(usize),
    #[error("composites are not multiplication by f: {0}")]
    NotFactorizing(String),
    #[error("linear solve undecided over Z: rational solution is not integral")]
    UndecidedOverZ,
    #[error("linear solve undecided over Z/{0}: non-unit pivot")]
    UndecidedOverZmod(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
