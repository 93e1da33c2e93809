use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("matrix is not homogeneous of degree {degree} at ({row}, {col})")]
    NotHomogeneous { degree: u8, row: usize, col: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("vertex {vertex} is not a sink")]
    NotASink { vertex: usize },

    #[error("vertex {vertex} is not a source")]
    NotASource { vertex: usize },

    #[error("invalid simple system: {0}")]
    InvalidSimpleSystem(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
