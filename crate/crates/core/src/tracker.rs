//! Incrementally maintained k-core of a graph under edge and node deletion.
//!
//! Deleting edges can only shrink a k-core, so after each deletion the new
//! core is obtained by peeling outward from the touched endpoints instead of
//! recomputing the whole decomposition.

use std::collections::{HashMap, HashSet};

use crate::cores::core_decompose;
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, NodeId};

#[derive(Debug, Clone)]
pub struct CoreTracker {
    graph: Graph,
    k: usize,
    in_core: Vec<bool>,
    core_degree: Vec<usize>,
    core_size: usize,
    core_edges: usize,
    // sum of full-graph degrees over core members
    core_endpoints: usize,
}

impl CoreTracker {
    /// Tracks the `k`-core of `graph`.
    pub fn new(graph: Graph, k: usize) -> Self {
        let dec = core_decompose(&graph);
        let n = graph.node_count();
        let in_core: Vec<bool> = dec.core_number.iter().map(|&c| c >= k).collect();
        let mut core_degree = vec![0; n];
        let mut core_size = 0;
        let mut core_edges = 0;
        let mut core_endpoints = 0;
        for v in 0..n {
            if !in_core[v] {
                continue;
            }
            core_size += 1;
            core_endpoints += graph.degree(v);
            core_degree[v] = graph.neighbors(v).iter().filter(|&&u| in_core[u]).count();
            core_edges += core_degree[v];
        }
        CoreTracker {
            graph,
            k,
            in_core,
            core_degree,
            core_size,
            core_edges: core_edges / 2,
            core_endpoints,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn in_core(&self, v: NodeId) -> bool {
        self.in_core[v]
    }

    #[inline]
    pub fn core_degree(&self, v: NodeId) -> usize {
        self.core_degree[v]
    }

    pub fn core_size(&self) -> usize {
        self.core_size
    }

    pub fn core_edge_count(&self) -> usize {
        self.core_edges
    }

    pub fn is_collapsed(&self) -> bool {
        self.core_size == 0
    }

    pub fn core_nodes(&self) -> Vec<NodeId> {
        (0..self.graph.node_count()).filter(|&v| self.in_core[v]).collect()
    }

    pub fn core_neighbors(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.graph.neighbors(v).iter().copied().filter(move |&u| self.in_core[u])
    }

    #[inline]
    pub fn is_corona(&self, v: NodeId) -> bool {
        self.in_core[v] && self.core_degree[v] == self.k
    }

    /// Core members with exactly `k` core neighbors, ascending.
    pub fn corona(&self) -> Vec<NodeId> {
        (0..self.graph.node_count()).filter(|&v| self.is_corona(v)).collect()
    }

    /// Edges with both endpoints in the core, canonical and sorted.
    pub fn core_edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.core_edges);
        for u in 0..self.graph.node_count() {
            if self.in_core[u] {
                out.extend(self.core_neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
            }
        }
        out
    }

    pub fn is_core_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.graph.contains_node(u)
            && self.graph.contains_node(v)
            && self.in_core[u]
            && self.in_core[v]
            && self.graph.has_edge(u, v)
    }

    /// Nodes that would leave the core if `{u, v}` were deleted, ascending.
    /// The tracker is not modified.
    pub fn gainers(&self, u: NodeId, v: NodeId) -> Result<Vec<NodeId>> {
        if !self.is_core_edge(u, v) {
            return Err(Error::EdgeNotInCore(u.min(v), u.max(v)));
        }
        let mut degree: HashMap<NodeId, usize> = HashMap::new();
        let mut removed: HashSet<NodeId> = HashSet::new();
        let mut stack = Vec::new();
        for w in [u, v] {
            let d = degree.entry(w).or_insert(self.core_degree[w]);
            *d -= 1;
            if *d < self.k {
                stack.push(w);
            }
        }
        while let Some(x) = stack.pop() {
            if !removed.insert(x) {
                continue;
            }
            for y in self.core_neighbors(x) {
                if removed.contains(&y) {
                    continue;
                }
                // the deleted edge was already accounted for
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                let d = degree.entry(y).or_insert(self.core_degree[y]);
                *d -= 1;
                if *d + 1 == self.k {
                    stack.push(y);
                }
            }
        }
        let mut out: Vec<NodeId> = removed.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Deletes `{u, v}` from the graph and returns the nodes expelled from the
    /// core, in expulsion order.
    pub fn delete_edge(&mut self, u: NodeId, v: NodeId) -> Result<Vec<NodeId>> {
        if !self.graph.remove_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut stack = Vec::new();
        if self.in_core[u] {
            self.core_endpoints -= 1;
        }
        if self.in_core[v] {
            self.core_endpoints -= 1;
        }
        if self.in_core[u] && self.in_core[v] {
            self.core_edges -= 1;
            for w in [u, v] {
                self.core_degree[w] -= 1;
                if self.core_degree[w] + 1 == self.k {
                    stack.push(w);
                }
            }
        }
        Ok(self.peel(stack))
    }

    /// Deletes every edge incident to `v`, returning them in deletion order.
    pub fn remove_node(&mut self, v: NodeId) -> Vec<Edge> {
        let nbrs = self.graph.neighbors(v).to_vec();
        for &u in &nbrs {
            self.delete_edge(v, u).expect("neighbor edge exists");
        }
        nbrs.into_iter().map(|u| canonical(u, v)).collect()
    }

    fn peel(&mut self, mut stack: Vec<NodeId>) -> Vec<NodeId> {
        let mut expelled = Vec::new();
        while let Some(x) = stack.pop() {
            if !self.in_core[x] {
                continue;
            }
            self.in_core[x] = false;
            self.core_size -= 1;
            self.core_endpoints -= self.graph.degree(x);
            expelled.push(x);
            for i in 0..self.graph.degree(x) {
                let y = self.graph.neighbors(x)[i];
                if !self.in_core[y] {
                    continue;
                }
                self.core_edges -= 1;
                self.core_degree[y] -= 1;
                if self.core_degree[y] + 1 == self.k {
                    stack.push(y);
                }
            }
            self.core_degree[x] = 0;
        }
        expelled
    }

    /// Fraction of edge endpoints outside the tracked core; 1 once the graph
    /// has no edges left.
    pub fn q_endpoint(&self) -> f64 {
        let m = self.graph.edge_count();
        if m == 0 {
            return 1.0;
        }
        1.0 - self.core_endpoints as f64 / (2 * m) as f64
    }

    /// Fraction of nodes outside the tracked core.
    pub fn q_node(&self) -> f64 {
        let n = self.graph.node_count();
        if n == 0 {
            return 1.0;
        }
        1.0 - self.core_size as f64 / n as f64
    }
}
