use thiserror::Error;

/// Errors raised by the enumeration and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("word {word} is not Kunz: {reason}")]
    NotKunz { word: String, reason: String },

    #[error("gap set is not the complement of a numerical semigroup: {0}")]
    NotSemigroup(String),

    #[error("depth {depth} exceeds 3; prefix decomposition is only defined for 3-Kunz words")]
    DepthTooLarge { depth: u32 },

    #[error("genus {requested} exceeds the oracle cap of {cap}; raise the cap explicitly to run it")]
    CapExceeded { requested: u32, cap: u32 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Exact counter used for every enumerative quantity.
pub type Count = u128;

pub(crate) fn add(a: Count, b: Count, what: &str) -> Result<Count> {
    a.checked_add(b).ok_or_else(|| Error::Overflow(what.to_string()))
}

pub(crate) fn mul(a: Count, b: Count, what: &str) -> Result<Count> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(what.to_string()))
}
