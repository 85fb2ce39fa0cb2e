use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed tree description: {0}")]
    Syntax(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("invalid cyclic order: {0}")]
    CyclicOrder(String),

    #[error("multiplicity {0} is not supported, only multiplicity 1")]
    Multiplicity(u64),

    #[error("edge count {n} outside the supported range 1..={max}")]
    EdgeBound { n: usize, max: usize },

    #[error("invalid two-term object: {0}")]
    InvalidObject(String),

    #[error("basis elements are not composable: {0}")]
    NotComposable(String),

    #[error("restriction is undefined: {0}")]
    RestrictionUndefined(String),

    #[error("objects are not compatible: {0}")]
    NotCompatible(String),

    #[error("cyclic order needs at least two summands, group has {0}")]
    GroupTooSmall(usize),

    #[error("index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// A combinatorial prediction disagreed with a homological check or an
    /// internal invariant broke. Never a user error.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}
