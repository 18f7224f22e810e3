use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("polynomial of degree {found} given, degree at least {required} required")]
    DegreeTooSmall { found: u32, required: u32 },

    #[error("linear map scale u must be non-zero")]
    ZeroScale,

    #[error("linear map shift v must be non-zero")]
    ZeroShift,

    #[error("not a quadrinomial: {0}")]
    NotQuadrinomial(String),

    #[error("not a trinomial in positive powers: {0}")]
    NotTrinomial(String),

    #[error("invalid lacunary polynomial: {0}")]
    InvalidProfile(String),

    #[error("Mason-Stothers hypothesis violated: {0}")]
    MasonStothersHypothesis(String),

    #[error("invalid index sequences: {0}")]
    InvalidSequences(String),

    #[error("invalid standard pair: {0}")]
    InvalidStandardPair(String),

    #[error("invalid Dickson degree {0}, must be at least 1")]
    InvalidDicksonDegree(u32),

    #[error("search bound must be at least 1")]
    EmptyBound,

    #[error("search bound {bound} exceeds the safety limit {limit}")]
    BoundTooLarge { bound: u64, limit: u64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("division by zero in coefficient at position {position}")]
    DivisionByZero { position: usize },
}

impl Error {
    /// True for errors caused by malformed text input rather than by
    /// mathematical preconditions.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::DivisionByZero { .. })
    }
}
