use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },

    #[error("invalid parameters: {0}")]
    Param(String),

    #[error("{0}")]
    Domain(String),

    #[error("resource guard: {0}")]
    Resource(String),

    #[error("copy {copy} has no K3,3 subdivision inside its own vertex block")]
    NoLocalSubdivision { copy: usize },

    #[error("star product spec cannot be aligned with the given embeddings: {0}")]
    IncompatibleSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
