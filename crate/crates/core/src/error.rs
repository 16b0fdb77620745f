use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("scalars from different fields ({0})")]
    FieldMismatch(String),

    #[error("containment violated: witness vector [{}] is not in the larger span", join(.witness))]
    NotContained { witness: Vec<String> },

    #[error("degree {degree} out of range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("cochain is not invariant: {0}")]
    NotInvariant(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

fn join(items: &[String]) -> String {
    items.join(", ")
}
