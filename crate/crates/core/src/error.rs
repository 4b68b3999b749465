use thiserror::Error;

/// Every failure the library can report. Check *failures* (an axiom that does
/// not hold) are not errors; they are entries in the relevant report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the configured bound {1}")]
    ConductorOverflow(u64, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrices live over different carriers ({0} vs {1})")]
    CarrierMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the structure is not populated for level `{0}`")]
    MissingStructure(String),
    #[error("coradical filtration stalled at dimension {0} of {1} (is the comultiplication coassociative?)")]
    NonTerminating(usize, usize),
    #[error("field too small: {0}; enlarge the conductor or pass explicit simple-block hints")]
    FieldTooSmall(String),
    #[error("invalid simple-block hints: {0}")]
    BadHints(String),
    #[error("arrow count {dim} between `{from}` and `{to}` is not divisible by r*s = {rs}")]
    DivisibilityViolation { from: String, to: String, dim: usize, rs: usize },
    #[error("no simple subcoalgebra contains the unit")]
    MissingTrivialVertex,
    #[error("coradical is not closed under multiplication: {0}")]
    ChevalleyViolation(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("entries of X(.)C are linearly dependent")]
    DependentEntries,
    #[error("the K-matrix system has no solution: {0}")]
    NoSolution(String),
    #[error("Yetter-Drinfeld data invalid: {0}")]
    YDViolation(String),
    #[error("splitting invalid: {0}")]
    SplittingViolation(String),
    #[error("element is not in R_H")]
    NotInR,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
