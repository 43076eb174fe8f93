//! Python bindings: graphs, core decomposition, attacks and percolation.

use std::path::PathBuf;

use coreattack::attack::{gainer_set, run_strategy, AttackResult, Strategy};
use coreattack::cores::{self, core_decompose};
use coreattack::graph::{self, Edge, Graph, LoadOptions};
use coreattack::percolation::{self, DegreeDistribution, PercolationConfig, SweepMode, SweepOutcome};
use coreattack::tracker::CoreTracker;
use coreattack::{metrics, Error};
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Undirected simple graph. Node ids are `0..node_count`; labels keep the
/// names read from an edge list.
#[pyclass(name = "Graph", module = "coreattack_py", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph on `n` nodes (default: one past the largest id) with `edges`.
    #[new]
    #[pyo3(signature = (edges=Vec::new(), n=None))]
    fn new(edges: Vec<Edge>, n: Option<usize>) -> PyResult<Self> {
        let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Ok(PyGraph {
            inner: Graph::from_edges(n, edges).map_err(to_py)?,
        })
    }

    /// Reads a whitespace-separated edge list; `#` and `%` start comments.
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        let inner = graph::load_edge_list_path(path, &LoadOptions::default()).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: Graph::complete(n),
        }
    }

    /// Uniform G(n, m).
    #[staticmethod]
    #[pyo3(signature = (n, m, seed=42))]
    fn erdos_renyi(n: usize, m: usize, seed: u64) -> PyResult<Self> {
        Ok(PyGraph {
            inner: percolation::er_graph(n, m, seed).map_err(to_py)?,
        })
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<Edge> {
        self.inner.edges().collect()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn core_numbers(&self) -> Vec<usize> {
        core_decompose(&self.inner).core_number
    }

    /// `(|V|, |E|, k_max, |V_I|, |E_I|)`.
    fn summary(&self) -> (usize, usize, usize, usize, usize) {
        let s = cores::summarize(&self.inner, &core_decompose(&self.inner));
        (s.nodes, s.edges, s.k_max, s.core_nodes, s.core_edges)
    }

    /// `(I, node ids of the innermost core)`.
    fn innermost_core(&self) -> PyResult<(usize, Vec<usize>)> {
        cores::innermost_core_nodes(&self.inner).map_err(to_py)
    }

    /// Innermost-core nodes with exactly I core neighbours.
    fn corona(&self) -> PyResult<Vec<usize>> {
        let (i, _) = cores::innermost_core_nodes(&self.inner).map_err(to_py)?;
        Ok(CoreTracker::new(self.inner.clone(), i).corona())
    }

    /// Nodes that leave the innermost core if edge `(u, v)` is deleted.
    fn gainers(&self, u: usize, v: usize) -> PyResult<Vec<usize>> {
        let (i, _) = cores::innermost_core_nodes(&self.inner).map_err(to_py)?;
        Ok(gainer_set(&self.inner, i, (u, v)).map_err(to_py)?.gainers)
    }

    /// Copy without `edges`.
    fn delete_edges(&self, edges: Vec<Edge>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.delete_edges(&edges).map_err(to_py)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.node_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph(nodes={}, edges={})", self.inner.node_count(), self.inner.edge_count())
    }
}

/// Outcome of one attack run.
#[pyclass(name = "AttackResult", module = "coreattack_py", frozen)]
struct PyAttackResult {
    inner: AttackResult,
}

#[pymethods]
impl PyAttackResult {
    #[getter]
    fn strategy(&self) -> &'static str {
        self.inner.strategy.name()
    }

    #[getter]
    fn seed(&self) -> Option<u64> {
        self.inner.seed
    }

    #[getter]
    fn deleted_edges(&self) -> Vec<Edge> {
        self.inner.deleted_edges.clone()
    }

    #[getter]
    fn deleted_nodes(&self) -> Vec<usize> {
        self.inner.deleted_nodes.clone()
    }

    #[getter]
    fn nde(&self) -> usize {
        self.inner.nde()
    }

    #[getter]
    fn ndn(&self) -> usize {
        self.inner.ndn()
    }

    #[getter]
    fn ecr(&self) -> f64 {
        self.inner.metrics.ecr
    }

    #[getter]
    fn far(&self) -> f64 {
        self.inner.metrics.far
    }

    #[getter]
    fn ecr_pct(&self) -> String {
        self.inner.metrics.ecr_pct.clone()
    }

    #[getter]
    fn far_pct(&self) -> String {
        self.inner.metrics.far_pct.clone()
    }

    /// `(nde, q, core_size, q_node)` after every deletion step.
    #[getter]
    fn trajectory(&self) -> Vec<(usize, f64, usize, f64)> {
        self.inner
            .trajectory
            .samples
            .iter()
            .map(|s| (s.nde, s.q, s.core_size, s.q_node))
            .collect()
    }

    /// JSON document with node labels from `graph`.
    #[pyo3(signature = (graph, network="graph"))]
    fn to_json(&self, graph: &PyGraph, network: &str) -> String {
        self.inner.to_json(&graph.inner, network, None).to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "AttackResult(strategy={}, seed={:?}, nde={}, ndn={})",
            self.inner.strategy,
            self.inner.seed,
            self.inner.nde(),
            self.inner.ndn()
        )
    }
}

/// Names accepted by `attack`.
#[pyfunction]
fn strategies() -> Vec<&'static str> {
    Strategy::ALL.iter().map(|s| s.name()).collect()
}

/// Runs one strategy until the innermost core is gone. `seed` is ignored by
/// the deterministic strategies.
#[pyfunction]
#[pyo3(signature = (graph, strategy, seed=42))]
fn attack(py: Python<'_>, graph: &PyGraph, strategy: &str, seed: u64) -> PyResult<PyAttackResult> {
    let strategy: Strategy = strategy.parse().map_err(to_py)?;
    let g = &graph.inner;
    let inner = py.detach(|| run_strategy(strategy, g, seed)).map_err(to_py)?;
    Ok(PyAttackResult { inner })
}

/// Fraction of edge endpoints outside the `k`-core.
#[pyfunction]
fn empirical_q(graph: &PyGraph, k: usize) -> PyResult<f64> {
    metrics::empirical_q(&graph.inner, k).map_err(to_py)
}

/// Mean-field Q after deleting `deleted` of `total_edges` edges at random
/// from a Poisson graph.
#[pyfunction]
fn q_fixed_point<'py>(
    py: Python<'py>,
    poisson_mean: f64,
    k: usize,
    deleted: usize,
    total_edges: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let dist = DegreeDistribution::poisson(poisson_mean).map_err(to_py)?;
    let cfg = PercolationConfig::new(k, deleted, total_edges).map_err(to_py)?;
    let fp = percolation::q_fixed_point(&dist, &cfg).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("k", fp.k)?;
    out.set_item("L", fp.deleted)?;
    out.set_item("p", fp.p)?;
    out.set_item("q", fp.q)?;
    out.set_item("iterations", fp.iterations)?;
    out.set_item("residual", fp.residual)?;
    Ok(out)
}

/// Deletes `step` eligible innermost-core edges per round until collapse.
/// Returns `{"k", "outcome", "rounds"}` with rounds as
/// `(cum_nde, q, core_size, q_node)`, starting from the untouched graph.
#[pyfunction]
#[pyo3(signature = (graph, mode="case_ii", step=1, seed=42))]
fn deletion_sweep<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    mode: &str,
    step: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let mode: SweepMode = mode.parse().map_err(to_py)?;
    let g = &graph.inner;
    let sweep = py.detach(|| percolation::deletion_sweep(g, mode, step, seed)).map_err(to_py)?;
    let rounds: Vec<(usize, f64, usize, f64)> = std::iter::once(&sweep.initial)
        .chain(sweep.trajectory.samples.iter())
        .map(|s| (s.nde, s.q, s.core_size, s.q_node))
        .collect();
    let out = PyDict::new(py);
    out.set_item("k", sweep.k)?;
    let outcome = match sweep.outcome {
        SweepOutcome::Collapsed => "collapsed",
        SweepOutcome::Exhausted => "exhausted",
    };
    out.set_item("outcome", outcome)?;
    out.set_item("collapse_nde", sweep.collapse_nde())?;
    out.set_item("rounds", rounds)?;
    Ok(out)
}

#[pymodule]
fn coreattack_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyAttackResult>()?;
    m.add_function(wrap_pyfunction!(strategies, m)?)?;
    m.add_function(wrap_pyfunction!(attack, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_q, m)?)?;
    m.add_function(wrap_pyfunction!(q_fixed_point, m)?)?;
    m.add_function(wrap_pyfunction!(deletion_sweep, m)?)?;
    Ok(())
}
