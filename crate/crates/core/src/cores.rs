//! k-core decomposition, innermost core and corona extraction.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Core number (k-shell index) of every node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    pub core_number: Vec<usize>,
    pub k_max: usize,
}

impl CoreDecomposition {
    /// Nodes with core number at least `k`, ascending.
    pub fn nodes_at_least(&self, k: usize) -> Vec<NodeId> {
        (0..self.core_number.len())
            .filter(|&v| self.core_number[v] >= k)
            .collect()
    }

    /// Writes `node_label,core_number` rows with a header.
    pub fn write_csv<W: std::io::Write>(&self, g: &Graph, mut out: W) -> std::io::Result<()> {
        writeln!(out, "node_label,core_number")?;
        for (v, c) in self.core_number.iter().enumerate() {
            writeln!(out, "{},{}", g.label(v), c)?;
        }
        Ok(())
    }
}

/// Linear-time peeling over degree buckets (Batagelj–Zaversnik).
pub fn core_decompose(g: &Graph) -> CoreDecomposition {
    let n = g.node_count();
    if n == 0 {
        return CoreDecomposition {
            core_number: Vec::new(),
            k_max: 0,
        };
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    // bin[d] = start of degree-d block in `order`
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[deg[v]];
            order[pos[v]] = v;
            next[deg[v]] += 1;
        }
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if deg[u] > deg[v] {
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order[pu] = w;
                    pos[w] = pu;
                    order[pw] = u;
                    pos[u] = pw;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }

    let k_max = deg.iter().copied().max().unwrap_or(0);
    CoreDecomposition {
        core_number: deg,
        k_max,
    }
}

/// Induced subgraph on nodes with core number at least `k`; `k = 0` returns
/// the whole graph.
pub fn k_core_subgraph(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let dec = core_decompose(g);
    g.induced_subgraph(&dec.nodes_at_least(k))
}

/// `(I, node ids of the I-core)` in the id space of `g`.
pub fn innermost_core_nodes(g: &Graph) -> Result<(usize, Vec<NodeId>)> {
    if g.edge_count() == 0 {
        return Err(Error::NoCore);
    }
    let dec = core_decompose(g);
    Ok((dec.k_max, dec.nodes_at_least(dec.k_max)))
}

/// The k-core with the largest `k`, as a standalone graph.
pub fn innermost_core(g: &Graph) -> Result<(usize, Graph)> {
    let (k, nodes) = innermost_core_nodes(g)?;
    Ok((k, g.induced_subgraph(&nodes)))
}

/// Sizes of a graph and its innermost core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoreSummary {
    pub nodes: usize,
    pub edges: usize,
    pub k_max: usize,
    pub core_nodes: usize,
    pub core_edges: usize,
}

impl std::fmt::Display for CoreSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.nodes, self.edges, self.k_max, self.core_nodes, self.core_edges
        )
    }
}

/// Summary of `g` given its decomposition. An edgeless graph has no
/// innermost core and reports zeros for it.
pub fn summarize(g: &Graph, dec: &CoreDecomposition) -> CoreSummary {
    let (core_nodes, core_edges) = if g.edge_count() == 0 {
        (0, 0)
    } else {
        let k = dec.k_max;
        let nodes = dec.core_number.iter().filter(|&&c| c >= k).count();
        let edges = g
            .edges()
            .filter(|&(u, v)| dec.core_number[u] >= k && dec.core_number[v] >= k)
            .count();
        (nodes, edges)
    };
    CoreSummary {
        nodes: g.node_count(),
        edges: g.edge_count(),
        k_max: dec.k_max,
        core_nodes,
        core_edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaSet {
    pub nodes: Vec<NodeId>,
    pub component_partition: Vec<Vec<NodeId>>,
}

/// Nodes of `core` with exactly `k` neighbors, split into the connected
/// components of the subgraph they induce.
pub fn corona(core: &Graph, k: usize) -> CoronaSet {
    let n = core.node_count();
    let in_corona: Vec<bool> = (0..n).map(|v| core.degree(v) == k).collect();
    let nodes: Vec<NodeId> = (0..n).filter(|&v| in_corona[v]).collect();

    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for &start in &nodes {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut part = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in core.neighbors(v) {
                if in_corona[u] && !seen[u] {
                    seen[u] = true;
                    part.push(u);
                    queue.push_back(u);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    CoronaSet {
        nodes,
        component_partition: parts,
    }
}
