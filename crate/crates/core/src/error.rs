use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape or index problems that prevent a value from being interpreted at all.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("label set {members:?} is not a closed sub-fusion rule")]
    NotClosed { members: Vec<usize> },

    #[error("numerical failure: {message} (worst residual {residual:e})")]
    Numerical { message: String, residual: f64 },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("unknown {kind} `{name}`; available: {}", available.join(", "))]
    Unknown {
        kind: &'static str,
        name: String,
        available: Vec<String>,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
