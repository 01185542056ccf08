use thiserror::Error;

/// Errors raised while building graphs, relative sets, problems or tail sweeps.
///
/// The exact linear algebra layer is total on its inputs and has no error
/// variants of its own.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    MalformedDocument(String),

    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge identifier `{0}`")]
    DuplicateEdge(String),

    #[error("edge `{edge}` has {role} `{vertex}` which is not a declared vertex")]
    DanglingEndpoint {
        edge: String,
        role: &'static str,
        vertex: String,
    },

    #[error("edge `{edge}` has parity {parity}; parity must be 0 or 1")]
    InvalidParity { edge: String, parity: i64 },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` is not regular: it receives no edges")]
    NotRegular(String),

    #[error(
        "vertex `{0}` already receives edges; tails attach only at vertices with no incoming edges"
    )]
    TailAtReceivingVertex(String),

    #[error("tail length must be at least 1")]
    ZeroTailLength,

    #[error("sweep attachment points must be pairwise distinct; `{0}` repeats")]
    DuplicateAttachmentPoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
