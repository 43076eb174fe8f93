//! Undirected simple graphs with external node labels.
//!
//! External labels are mapped to dense internal ids `0..n` in order of first
//! appearance. Every undirected edge is stored once per endpoint in sorted
//! neighbor lists; edge sets exchanged with callers use the canonical
//! `(min, max)` form.

use std::collections::{BTreeSet, HashMap};
use std::io::BufRead;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Canonical undirected edge, `0 <= min < max`.
pub type Edge = (NodeId, NodeId);

#[inline]
pub fn canonical(u: NodeId, v: NodeId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` isolated nodes labelled `"0"`, `"1"`, ...
    pub fn with_nodes(n: usize) -> Self {
        Graph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::with_nodes(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph on `n` numbered nodes. Self-loops are dropped and
    /// duplicate edges collapsed, as in [`load_edge_list`].
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Graph::with_nodes(n);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownNode(u));
            }
            if v >= n {
                return Err(Error::UnknownNode(v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_node(&mut self, label: impl Into<String>) -> NodeId {
        self.labels.push(label.into());
        self.adjacency.push(Vec::new());
        self.labels.len() - 1
    }

    /// Inserts `{u, v}`. Returns false for self-loops and existing edges.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> bool {
        if u == v {
            return false;
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                self.edge_count += 1;
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> bool {
        if u >= self.node_count() || v >= self.node_count() {
            return false;
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(pos) => {
                self.adjacency[u].remove(pos);
                let pos = self.adjacency[v].binary_search(&u).unwrap();
                self.adjacency[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Removes every edge incident to `v` and returns them in canonical form.
    /// The node itself stays in the graph.
    pub fn isolate_node(&mut self, v: NodeId) -> Vec<Edge> {
        let nbrs = std::mem::take(&mut self.adjacency[v]);
        for &u in &nbrs {
            let pos = self.adjacency[u].binary_search(&v).unwrap();
            self.adjacency[u].remove(pos);
        }
        self.edge_count -= nbrs.len();
        nbrs.into_iter().map(|u| canonical(u, v)).collect()
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn contains_node(&self, v: NodeId) -> bool {
        v < self.node_count()
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && v < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edges in canonical form, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `nodes`. Node `i` of the result is the `i`-th
    /// smallest id of `nodes` and keeps its label.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Graph {
        let keep: BTreeSet<NodeId> = nodes.iter().copied().collect();
        let index: HashMap<NodeId, NodeId> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut sub = Graph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            adjacency: vec![Vec::new(); keep.len()],
            edge_count: 0,
        };
        for (&old, &new) in &index {
            let nbrs: Vec<NodeId> = self.adjacency[old]
                .iter()
                .filter_map(|u| index.get(u).copied())
                .collect();
            sub.edge_count += nbrs.len();
            sub.adjacency[new] = nbrs;
        }
        for nbrs in &mut sub.adjacency {
            nbrs.sort_unstable();
        }
        sub.edge_count /= 2;
        sub
    }

    /// Copy of the graph without `edges`. The node set is unchanged.
    pub fn delete_edges<'a, I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &(u, v) in edges {
            if !g.remove_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `v` and its neighbors.
    pub fn neighbor_closure(&self, v: NodeId) -> Result<Graph> {
        if !self.contains_node(v) {
            return Err(Error::UnknownNode(v));
        }
        let mut nodes = self.adjacency[v].clone();
        nodes.push(v);
        Ok(self.induced_subgraph(&nodes))
    }
}

#[derive(Debug, Clone)]
pub struct LoadOptions {
    /// Lines starting with any of these prefixes are skipped.
    pub comment_prefixes: Vec<String>,
    /// Token separator; `None` splits on any whitespace.
    pub separator: Option<char>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            comment_prefixes: vec!["#".into(), "%".into()],
            separator: None,
        }
    }
}

/// Reads a two-column edge list. Blank lines and comment lines are skipped,
/// self-loops dropped, and duplicate or reversed edges collapsed.
pub fn load_edge_list<R: BufRead>(reader: R, opts: &LoadOptions) -> Result<Graph> {
    let mut g = Graph::new();
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut intern = |g: &mut Graph, tok: &str| -> NodeId {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = g.add_node(tok);
        ids.insert(tok.to_owned(), id);
        id
    };

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || opts.comment_prefixes.iter().any(|p| trimmed.starts_with(p.as_str())) {
            continue;
        }
        let tokens: Vec<&str> = match opts.separator {
            Some(sep) => trimmed.split(sep).map(str::trim).filter(|t| !t.is_empty()).collect(),
            None => trimmed.split_whitespace().collect(),
        };
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                found: tokens.len(),
            });
        }
        let u = intern(&mut g, tokens[0]);
        let v = intern(&mut g, tokens[1]);
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn load_edge_list_path(path: impl AsRef<std::path::Path>, opts: &LoadOptions) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    load_edge_list(std::io::BufReader::new(file), opts)
}
