use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    /// A graph would exceed the 64-vertex representation limit.
    #[error("graph too large: {n} vertices exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },

    /// Brute-force canonicalization is capped at 10 vertices.
    #[error("canonical form unsupported for n = {n}: permutation search is capped at n = {max}")]
    CanonicalUnsupported { n: usize, max: usize },

    /// A caller violated a documented precondition; the message names it.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed. Reaching this would falsify a
    /// step of one of the certified procedures, so it is never swallowed.
    #[error("structural violation: {0}")]
    StructuralViolation(String),

    /// A query outside the supported parameter range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Invalid vertex index or vertex set for the given graph.
    #[error("invalid vertex data: {0}")]
    InvalidVertex(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
