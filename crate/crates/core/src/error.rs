use thiserror::Error;

/// Errors raised by the library.
///
/// `Resource` is kept separate from the domain errors because callers (the
/// CLI in particular) report it with a different exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={ambient}")]
    VertexOutOfRange { vertex: usize, ambient: usize },
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),
    #[error("ambient size {0} is not supported (must be between 1 and 64)")]
    AmbientSize(usize),
    #[error("facets {0:?} and {1:?} are comparable")]
    ComparableFacets(Vec<usize>, Vec<usize>),
    #[error("mismatched number of variables: {0} vs {1}")]
    VariableCount(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
