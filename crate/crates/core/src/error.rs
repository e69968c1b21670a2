use thiserror::Error;

/// Errors raised by the library. Domain verdicts (an invalid hyperpotential,
/// a quotient that does not stabilize) are results, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("duplicate vertex '{id}' at {location}")]
    DuplicateVertex { id: String, location: String },
    #[error("duplicate arrow '{id}' at {location}")]
    DuplicateArrow { id: String, location: String },
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown arrow '{0}'")]
    UnknownArrow(String),
    #[error("path is not composable at arrow '{0}'")]
    NotComposable(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("quiver mismatch")]
    QuiverMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad scalar '{0}'")]
    BadScalar(String),
    #[error("potential expected: term {0} is not a cycle")]
    PotentialExpected(String),
    #[error("block condition violated for '{arrow}': term {term} does not walk {expected}")]
    BlockViolation {
        arrow: String,
        term: String,
        expected: String,
    },
    #[error("substitution is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("potential vanishes in char {0}")]
    PotentialVanishes(u64),
    #[error("inconclusive at this truncation: {0}")]
    Inconclusive(String),
    #[error("orbit category not Hom-finite")]
    NotHomFinite,
    #[error("window too narrow: {0}")]
    WindowTooNarrow(String),
    #[error("unsupported diagram '{0}'")]
    UnsupportedDiagram(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("closure did not terminate after {0} seeds")]
    NonTerminating(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
