use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by a series without a cancellable valuation")]
    DivisionByNonUnit,
    #[error("square root requires constant term 1")]
    NonUnitConstantTerm,
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("unassigned variable `{0}`")]
    UnassignedVariable(String),
    #[error("derivative vanishes at the origin; the root is not simple")]
    SingularRoot,
    #[error("initial value is not a root of the equation at z=0")]
    NoRootAtOrigin,
    #[error("step set needs a negative and a positive jump")]
    DegenerateStepSet,
    #[error("characteristic equation is degenerate for these weights")]
    DegenerateCharacteristic,
    #[error("weights outside the domain of this closed form: {0}")]
    DegenerateWeights(String),
    #[error("no branch with a power series expansion")]
    NoPowerSeriesBranch,
    #[error("size {0} exceeds the enumeration limit {1}")]
    SizeTooLarge(usize, usize),
    #[error("boundary equation `{0}` does not hold")]
    BoundaryCheckFailed(String),
    #[error("network access is disabled; pass the explicit opt-in flag")]
    NetworkDisabled,
    #[error("malformed b-file at line {line}: {msg}")]
    MalformedBFile { line: usize, msg: String },
    #[error("series has non-integer coefficient at index {0}")]
    NonIntegerCoefficients(usize),
    #[error("config line {line}, field `{field}`: {msg}")]
    ConfigParse {
        line: usize,
        field: String,
        msg: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
