//! Attack-quality metrics (NDN, NDE, ECR, FAR), the empirical Q index and
//! per-step trajectories.

use std::io::Write;

use serde::Serialize;

use crate::cores::{core_decompose, CoreDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub ndn: usize,
    pub nde: usize,
    /// Edge count of the original graph, the ECR denominator.
    pub total_edges: usize,
    pub ecr: f64,
    pub ecr_pct: String,
    /// Nodes outside the original innermost core whose core number changed.
    pub far_changed: usize,
    /// Number of nodes outside the original innermost core.
    pub far_denominator: usize,
    pub far: f64,
    pub far_pct: String,
    pub i_original: usize,
    pub v_i_size: usize,
}

impl MetricsReport {
    /// One CSV row: `network,strategy,ndn,nde,ecr_pct,far_pct`.
    pub fn csv_row(&self, network: &str, strategy: &str) -> String {
        format!(
            "{network},{strategy},{},{},{},{}",
            self.ndn, self.nde, self.ecr_pct, self.far_pct
        )
    }

    pub const CSV_HEADER: &'static str = "network,strategy,ndn,nde,ecr_pct,far_pct";
}

/// `100 * num / den` with four decimals, rounding half to even. Exact.
pub fn format_percent(num: u64, den: u64) -> String {
    if den == 0 {
        return "0.0000".to_string();
    }
    let scaled = num as u128 * 1_000_000;
    let den = den as u128;
    let mut q = scaled / den;
    let r = scaled % den;
    if 2 * r > den || (2 * r == den && q % 2 == 1) {
        q += 1;
    }
    format!("{}.{:04}", q / 10_000, q % 10_000)
}

/// Compares an attacked graph against the original. `deleted_nodes` are the
/// nodes removed by a node-deletion strategy (their count is NDN; isolation
/// alone does not count).
pub fn compute_metrics(
    original: &Graph,
    original_decomp: &CoreDecomposition,
    attacked: &Graph,
    deleted_nodes: &[NodeId],
) -> Result<MetricsReport> {
    if original.node_count() != attacked.node_count() {
        return Err(Error::NodeCountMismatch(original.node_count(), attacked.node_count()));
    }
    if let Some((u, v)) = attacked.edges().find(|&(u, v)| !original.has_edge(u, v)) {
        return Err(Error::NotDerivative(u, v));
    }
    let nde = original.edge_count() - attacked.edge_count();
    let i_original = original_decomp.k_max;
    let after = core_decompose(attacked);

    let mut far_changed = 0;
    let mut far_denominator = 0;
    let mut v_i_size = 0;
    for (v, &c) in original_decomp.core_number.iter().enumerate() {
        if c >= i_original {
            v_i_size += 1;
            continue;
        }
        far_denominator += 1;
        if after.core_number[v] != c {
            far_changed += 1;
        }
    }

    let total_edges = original.edge_count();
    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    Ok(MetricsReport {
        ndn: deleted_nodes.len(),
        nde,
        total_edges,
        ecr: ratio(nde, total_edges),
        ecr_pct: format_percent(nde as u64, total_edges as u64),
        far_changed,
        far_denominator,
        far: ratio(far_changed, far_denominator),
        far_pct: format_percent(far_changed as u64, far_denominator as u64),
        i_original,
        v_i_size,
    })
}

/// Fraction of edge endpoints (two per edge) that lie outside the `k`-core of
/// `g`. Equals 1 once the `k`-core is empty.
pub fn empirical_q(g: &Graph, k: usize) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidArgument("empirical Q of an edgeless graph".into()));
    }
    let dec = core_decompose(g);
    let outside: usize = g
        .edges()
        .map(|(u, v)| usize::from(dec.core_number[u] < k) + usize::from(dec.core_number[v] < k))
        .sum();
    Ok(outside as f64 / (2 * g.edge_count()) as f64)
}

/// Fraction of nodes outside the `k`-core.
pub fn empirical_q_nodes(g: &Graph, k: usize) -> f64 {
    if g.node_count() == 0 {
        return 1.0;
    }
    let dec = core_decompose(g);
    dec.core_number.iter().filter(|&&c| c < k).count() as f64 / g.node_count() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QSample {
    /// Cumulative deleted edges.
    pub nde: usize,
    /// Endpoint-fraction Q.
    pub q: f64,
    pub core_size: usize,
    /// Node-fraction Q.
    pub q_node: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct QTrajectory {
    pub samples: Vec<QSample>,
}

impl QTrajectory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends one sample; NDE must not decrease.
    pub fn record(&mut self, sample: QSample) {
        if let Some(last) = self.samples.last() {
            debug_assert!(sample.nde >= last.nde, "trajectory NDE went backwards");
        }
        self.samples.push(sample);
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn last(&self) -> Option<&QSample> {
        self.samples.last()
    }

    /// CSV with header `step,nde,q_empirical,core_size,q_node`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "step,nde,q_empirical,core_size,q_node")?;
        for (i, s) in self.samples.iter().enumerate() {
            writeln!(out, "{},{},{:.6},{},{:.6}", i + 1, s.nde, s.q, s.core_size, s.q_node)?;
        }
        Ok(())
    }
}
