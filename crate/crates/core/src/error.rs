use std::io;

use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: expected 2 tokens, found {found}")]
    Parse { line: usize, found: usize },

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("no core structure: graph has no edges")]
    NoCore,

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(NodeId, NodeId),

    #[error("edge ({0}, {1}) is not in the innermost core")]
    EdgeNotInCore(NodeId, NodeId),

    #[error("unknown node id {0}")]
    UnknownNode(NodeId),

    #[error("attacked graph is not a deletion-only derivative: edge ({0}, {1}) is new")]
    NotDerivative(NodeId, NodeId),

    #[error("graphs have different node counts ({0} vs {1})")]
    NodeCountMismatch(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("no attack of at most {0} edges collapses the core")]
    NoAttackWithin(usize),

    #[error("fixed-point iteration did not converge after {iterations} steps (last q = {last}, residual = {residual:e})")]
    NoConvergence {
        iterations: usize,
        last: f64,
        residual: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
