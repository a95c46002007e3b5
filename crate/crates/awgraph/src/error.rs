//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input; `pos` is the byte offset into the string.
    #[error("graph6 parse error at byte {pos}: {reason}")]
    Graph6 { pos: usize, reason: String },

    /// Malformed edge-list or other textual input.
    #[error("invalid input: {0}")]
    Input(String),

    /// The graph is not connected; `u` and `v` witness two components.
    #[error("graph is disconnected: no path joins {u} and {v}")]
    Disconnected { u: usize, v: usize },

    /// A vertex label outside 1..=n.
    #[error("vertex {v} out of range 1..={n}")]
    VertexRange { v: usize, n: usize },

    /// Self-loops and other malformed edges are rejected.
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    /// An operation that requires a tree was given something else.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// A coloring that is not total, not surjective, or otherwise malformed.
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Valid input that exceeds what this implementation supports.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A claim id that is not in the registry.
    #[error("unknown claim: {0}")]
    UnknownClaim(String),

    /// An internal invariant failed; always a bug, never a user error.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
