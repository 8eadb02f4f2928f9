use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid involution profile: {0}")]
    Profile(String),

    #[error("invalid recipe: {0}")]
    Recipe(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("invalid eigenvalue spec: {0}")]
    Spec(String),

    #[error("formula has a pole at the requested point")]
    Pole,

    #[error("degenerate flow: {0}")]
    DegenerateFlow(String),

    #[error("parse error: {0}")]
    Parse(String),
}
