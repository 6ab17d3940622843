use thiserror::Error;

/// Errors raised by the algebraic routines and the text formats.
///
/// Verdicts (a form is not contact, Jacobi fails, ...) are not errors; they are
/// reported through the verdict types. Errors mean the question could not be
/// asked or answered.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: form of degree {degree} evaluated on {given} vectors")]
    Arity { degree: usize, given: usize },

    #[error("{operation} requires {expected} dimension, algebra has dimension {dim}")]
    Parity {
        operation: &'static str,
        expected: &'static str,
        dim: usize,
    },

    #[error("rank depends on the parameters: pivot `{pivot}` is not implied nonzero by the constraints")]
    RankInstability { pivot: String },

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a contact form: {0}")]
    NotContact(String),

    #[error("degenerate two-form: {0}")]
    Degenerate(String),

    #[error("vector is not central: {0}")]
    NotCentral(String),

    #[error("extension data violates the cocycle conditions: {0}")]
    Cocycle(String),

    #[error("inadmissible extension parameter: condition `{0}` vanishes")]
    Inadmissible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
