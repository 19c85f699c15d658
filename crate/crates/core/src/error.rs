use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    OrderOutOfRange(usize),

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid size for {family}: {detail}")]
    InvalidSize { family: &'static str, detail: String },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("order {n} exceeds the counting cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("degree {k} out of range for order {n}")]
    DegreeOutOfRange { n: usize, k: usize },

    #[error("partition must have at least one part, all parts >= 1, total <= 64")]
    InvalidPartition,

    /// Raised when the identity sum = 2^n + upsilon fails; always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("line {line}: {source}")]
    Line {
        line: u64,
        #[source]
        source: Graph6Error,
    },

    #[error("line {line}: expected order {expected}, found {found}")]
    OrderMismatch {
        line: u64,
        expected: usize,
        found: usize,
    },

    #[error("checkpoint {path:?} does not match this campaign: {reason}")]
    CheckpointMismatch { path: PathBuf, reason: String },

    #[error("checkpoint {path:?}: {source}")]
    Checkpoint {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("stream error at position {position}: {source}")]
    Stream {
        position: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("truncated input")]
    Truncated,
    #[error("malformed header byte {0:#04x}")]
    BadHeader(u8),
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("order {0} exceeds 64")]
    TooLarge(u64),
    #[error("{0} trailing bytes after the adjacency payload")]
    TrailingGarbage(usize),
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
}
