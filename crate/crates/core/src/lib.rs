//! k-core decomposition, innermost-core collapse attacks and the Q index of
//! the k-core under edge deletion.

pub mod attack;
pub mod cores;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod percolation;
pub mod tracker;

#[cfg(test)]
mod testutil;

pub use attack::{run_strategy, AttackResult, Strategy};
pub use cores::{core_decompose, innermost_core, summarize, CoreDecomposition, CoreSummary};
pub use error::{Error, Result};
pub use graph::{load_edge_list, load_edge_list_path, Edge, Graph, LoadOptions, NodeId};
pub use metrics::{compute_metrics, empirical_q, MetricsReport};
pub use tracker::CoreTracker;
