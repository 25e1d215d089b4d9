use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("window out of range: start {start}, length {len}, path has {edges} edges")]
    OutOfRange {
        start: usize,
        len: usize,
        edges: usize,
    },

    #[error("paths live on different vertex sets (n={left} vs n={right})")]
    MismatchedN { left: usize, right: usize },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("the two tuple permutations are identical")]
    NoDifference,

    #[error("compatibility graph too large: {vertices} vertices (ceiling n <= {max_n})")]
    TooLarge { vertices: u128, max_n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate family member on line {line} (same path as line {first})")]
    DuplicateMember { line: usize, first: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadParameters(msg.into())
    }
}
