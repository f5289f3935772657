use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("numerical consistency: {0}")]
    NumericalConsistency(String),

    #[error("degenerate partition: {0}")]
    DegeneratePartition(String),

    #[error("index out of bounds: {0}")]
    Index(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("invalid triple kind: {0}")]
    InvalidKind(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("incomplete triple table: {0}")]
    IncompleteTable(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("degenerate polynomial: {0}")]
    DegeneratePolynomial(String),

    #[error("refinement failed after {bits} bits; best interval [{lo}, {hi}]")]
    Refinement { bits: u32, lo: String, hi: String },

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("elimination mismatch: {0}")]
    EliminationMismatch(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
