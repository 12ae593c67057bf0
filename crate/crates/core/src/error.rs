use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("interval lower endpoint exceeds upper endpoint")]
    EmptyInterval,

    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("method not applicable: {0}")]
    MethodInapplicable(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("series order too low; need k >= {required_k}")]
    InsufficientOrder { required_k: usize },

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}
