use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("node {node} out of range for a graph with {node_count} nodes")]
    InvalidNode { node: usize, node_count: usize },

    #[error("graph needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),

    #[error("signaling did not resolve within {0} rounds")]
    SignalingCapExceeded(u32),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
