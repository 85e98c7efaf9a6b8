use thiserror::Error;

/// Errors produced by construction, parsing and recursion operations.
#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("context mismatch between operands")]
    ContextMismatch,
    #[error("evaluation point has a zero coordinate")]
    ZeroCoordinate,
    #[error("nonzero remainder: element is not a multiple of x1 - {c}")]
    NonzeroRemainder { c: u32 },
    #[error("element lies outside the domain ideal")]
    OutsideIdeal,
    #[error("lattice basis is singular")]
    SingularLattice,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("bad generator letter {0:?}")]
    BadLetter(String),
    #[error("vertex letter {letter} out of range for degree {degree}")]
    BadVertexLetter { letter: usize, degree: usize },
    #[error("coset resolution failed for {0}")]
    CosetResolution(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("operation requires a representation built from a named construction")]
    NotAFamily,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
