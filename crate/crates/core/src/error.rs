use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Pauli symbol {0} (expected 0, 1, 2 or 3)")]
    InvalidSymbol(u8),

    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{n} qubits exceeds the dense limit of {limit}")]
    Capacity { n: usize, limit: usize },

    #[error("matrix dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("degree {degree} exceeds the declared degree {d}")]
    DegreeExceeded { degree: usize, d: usize },

    #[error("subset {0} is not the image of a Pauli index")]
    NotInImage(String),

    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("empirical coefficients need at least one sample")]
    EmptySamples,

    #[error("oracle failed at query {index} after {completed} successful queries: {reason}")]
    Oracle {
        index: usize,
        completed: usize,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("manifest: {0}")]
    Manifest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
