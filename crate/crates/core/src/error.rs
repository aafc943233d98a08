use thiserror::Error;

pub type Result<T> = std::result::Result<T, GroupError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed cycle notation {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} repeated inside a cycle")]
    RepeatedPoint { point: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("images do not form a bijection of 1..={degree}")]
    NotBijection { degree: usize },

    #[error("group order exceeds u128")]
    OrderOverflow,

    #[error("{what} of size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not minimal normal")]
    NotMinimalNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix {index} is singular mod {p}")]
    SingularMatrix { index: usize, p: u64 },

    #[error("invalid construction: {0}")]
    InvalidSpec(String),

    #[error("unknown catalog group {0:?}")]
    UnknownGroup(String),

    #[error("operation not applicable: {0}")]
    NotApplicable(String),
}

impl GroupError {
    pub fn is_cap(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. })
    }
}
