use thiserror::Error;

use crate::equivalence::SwapGraph;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("invalid planted graph: {}", .0.join("; "))]
    InvalidGraph(Vec<String>),

    #[error("swap not applicable: {0}")]
    SwapNotApplicable(String),

    #[error("invalid SDR: {0}")]
    InvalidSdr(String),

    /// The family has no transversal; the listed set positions (0-based)
    /// jointly cover fewer elements than their count.
    #[error("no transversal: sets at positions {0:?} cover too few elements")]
    NoTransversal(Vec<usize>),

    #[error("instance with {size} elements exceeds the enumeration limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Parse(String),

    /// Swap-graph exploration hit the node cap; the partial graph explored
    /// so far is attached.
    #[error("swap graph truncated at {limit} nodes")]
    SwapGraphLimit { limit: usize, partial: Box<SwapGraph> },

    #[error("internal invariant violation: {0}")]
    Internal(String),
}
