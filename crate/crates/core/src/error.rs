use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("zero subspace")]
    ZeroSubspace,

    #[error("not artin: Hilbert function does not vanish by degree {0}")]
    NotArtin(usize),

    #[error("inadmissible points: {0}")]
    Inadmissible(String),

    #[error("malformed Hilbert function: {0}")]
    MalformedHilbert(String),

    #[error("not a level Hilbert function: concavity fails at index {0}")]
    NotLevel(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("Hilbert function mismatch: expected {expected}, found {found}")]
    HilbertMismatch { expected: String, found: String },

    #[error("improper intersection: expected dimension {expected}, found {found}")]
    Improper { expected: usize, found: usize },

    #[error("no witness needed: {0}")]
    NoWitness(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}
