//! Erdős–Rényi graphs, corona-targeted deletion sweeps and the mean-field
//! Q index of the k-core under random edge deletion.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cores::core_decompose;
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph};
use crate::metrics::{QSample, QTrajectory};
use crate::tracker::CoreTracker;

/// Uniform simple graph with exactly `n` nodes and `m` edges, G(n, m).
pub fn er_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let capacity = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > capacity {
        return Err(Error::InvalidArgument(format!(
            "{m} edges do not fit in a simple graph on {n} nodes (max {capacity})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |count: usize, rng: &mut ChaCha8Rng| -> Vec<Edge> {
        let mut seen = HashSet::with_capacity(count);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && seen.insert(canonical(u, v)) {
                out.push(canonical(u, v));
            }
        }
        out
    };
    if 2 * m <= capacity {
        return Graph::from_edges(n, draw(m, &mut rng));
    }
    // dense: sample the complement instead
    let skip: HashSet<Edge> = draw(capacity - m, &mut rng).into_iter().collect();
    let mut g = Graph::with_nodes(n);
    for u in 0..n {
        for v in u + 1..n {
            if !skip.contains(&(u, v)) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Degree distribution `P(i)` on `0..=i_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    pmf: Vec<f64>,
    mean: f64,
    /// Probability mass beyond `i_max` before renormalisation.
    tail_mass: f64,
}

pub const MAX_TAIL_MASS: f64 = 1e-10;

impl DegreeDistribution {
    /// Normalises `weights` into a pmf.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) || weights.iter().any(|&w| w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidArgument("degree weights must be non-negative with positive sum".into()));
        }
        let pmf: Vec<f64> = weights.into_iter().map(|w| w / total).collect();
        let mean = pmf.iter().enumerate().map(|(i, p)| i as f64 * p).sum();
        Ok(DegreeDistribution {
            pmf,
            mean,
            tail_mass: 0.0,
        })
    }

    /// Poisson(`mean`) truncated where the remaining tail drops below
    /// [`MAX_TAIL_MASS`], then renormalised.
    pub fn poisson(mean: f64) -> Result<Self> {
        if !(mean > 0.0) || !mean.is_finite() {
            return Err(Error::InvalidArgument(format!("Poisson mean must be positive, got {mean}")));
        }
        let mut pmf = Vec::new();
        let mut term = (-mean).exp();
        let mut cumulative = 0.0;
        let mut i = 0usize;
        loop {
            pmf.push(term);
            cumulative += term;
            // stop once past the mode and the remaining mass is negligible
            if i as f64 > mean && 1.0 - cumulative < MAX_TAIL_MASS * 0.01 {
                break;
            }
            i += 1;
            term *= mean / i as f64;
            if i > 100_000 {
                break;
            }
        }
        let tail_mass = (1.0 - cumulative).max(0.0);
        let mut dist = DegreeDistribution::from_weights(pmf)?;
        dist.tail_mass = tail_mass;
        Ok(dist)
    }

    /// Empirical degree distribution of a graph.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let max = (0..g.node_count()).map(|v| g.degree(v)).max().unwrap_or(0);
        let mut counts = vec![0.0; max + 1];
        for v in 0..g.node_count() {
            counts[g.degree(v)] += 1.0;
        }
        DegreeDistribution::from_weights(counts)
    }

    /// `P(i)`, zero beyond the truncation point.
    pub fn p(&self, i: usize) -> f64 {
        self.pmf.get(i).copied().unwrap_or(0.0)
    }

    pub fn i_max(&self) -> usize {
        self.pmf.len() - 1
    }

    /// Mean degree `z1 = sum i P(i)`.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }
}

/// Random deletion of `deleted` out of `total_edges` edges, for the `k`-core.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PercolationConfig {
    pub k: usize,
    pub deleted: usize,
    pub total_edges: usize,
}

impl PercolationConfig {
    pub fn new(k: usize, deleted: usize, total_edges: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
        }
        if total_edges == 0 || deleted > total_edges {
            return Err(Error::InvalidArgument(format!(
                "cannot delete {deleted} of {total_edges} edges"
            )));
        }
        Ok(PercolationConfig {
            k,
            deleted,
            total_edges,
        })
    }

    /// Retention probability `p = 1 - L / |E|`.
    pub fn p(&self) -> f64 {
        1.0 - self.deleted as f64 / self.total_edges as f64
    }
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

fn ln_binom(n: usize, k: usize) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// `a^x` with `0^0 = 1`, in log space.
fn ln_pow(a: f64, x: usize) -> f64 {
    if x == 0 {
        0.0
    } else {
        x as f64 * a.ln()
    }
}

/// Precomputed `ln i!` for the fixed-point sums.
struct LnFactorials(Vec<f64>);

impl LnFactorials {
    fn new(n: usize) -> Self {
        let mut t = vec![0.0; n + 1];
        for i in 1..=n {
            t[i] = t[i - 1] + (i as f64).ln();
        }
        LnFactorials(t)
    }

    fn binom(&self, n: usize, k: usize) -> f64 {
        self.0[n] - self.0[k] - self.0[n - k]
    }
}

/// Branch weight for following an edge to a node of degree `i` with `l` of
/// its edges deleted. With `deleted_branch = false` the followed edge
/// survives and `l` counts the other `i - 1` edges; with `true` the followed
/// edge is itself one of the `l` deleted edges.
pub fn q_kernel(dist: &DegreeDistribution, cfg: &PercolationConfig, i: usize, l: usize, deleted_branch: bool) -> Result<f64> {
    if i == 0 || l > i {
        return Err(Error::InvalidArgument(format!("q_kernel needs 0 <= l <= i and i >= 1, got i={i}, l={l}")));
    }
    Ok(kernel(dist, cfg.p(), i, l, deleted_branch, ln_binom))
}

fn kernel(
    dist: &DegreeDistribution,
    p: f64,
    i: usize,
    l: usize,
    deleted_branch: bool,
    ln_binom: impl Fn(usize, usize) -> f64,
) -> f64 {
    let pi = dist.p(i);
    if pi == 0.0 {
        return 0.0;
    }
    let c = if deleted_branch {
        if l == 0 {
            return 0.0;
        }
        ln_binom(i - 1, l - 1)
    } else {
        if l > i - 1 {
            return 0.0;
        }
        ln_binom(i - 1, l)
    };
    let lp = ln_pow(1.0 - p, l) + ln_pow(p, i - l);
    if lp == f64::NEG_INFINITY {
        return 0.0;
    }
    i as f64 * pi / dist.mean() * (c + lp).exp()
}

/// Right-hand side of the self-consistency equation for Q.
pub fn q_map(dist: &DegreeDistribution, cfg: &PercolationConfig, q: f64) -> f64 {
    let i_max = dist.i_max();
    let lf = LnFactorials::new(i_max + 1);
    q_map_with(dist, cfg, q, &lf)
}

fn q_map_with(dist: &DegreeDistribution, cfg: &PercolationConfig, q: f64, lf: &LnFactorials) -> f64 {
    let p = cfg.p();
    let k = cfg.k;
    let big_l = cfg.deleted;
    let binom = |n: usize, r: usize| lf.binom(n, r);
    // sum_{n=0}^{cap} C(r, n) Q^{r-n} (1-Q)^n
    let tail = |r: usize, cap: usize| -> f64 {
        (0..=cap.min(r))
            .map(|n| (lf.binom(r, n) + ln_pow(q, r - n) + ln_pow(1.0 - q, n)).exp())
            .sum()
    };

    let mut total = 0.0;
    // a node of degree j = i + 1 reached along an edge, i other edges
    for j in 1..=dist.i_max() {
        let i = j - 1;
        // surviving followed edge, l of the other i deleted, n <= k-2 of the rest in the core
        for l in 0..=i.min(big_l) {
            let w = kernel(dist, p, j, l, false, binom);
            if w > 0.0 {
                total += w * tail(i - l, k - 2);
            }
        }
        // deleted followed edge: R(i+1, l+1) for l = 0..L-1, n <= k-1
        if big_l >= 1 {
            for l in 0..=i.min(big_l - 1) {
                let w = kernel(dist, p, j, l + 1, true, binom);
                if w > 0.0 {
                    total += w * tail(i - l, k - 1);
                }
            }
        }
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedPoint {
    pub k: usize,
    #[serde(rename = "L")]
    pub deleted: usize,
    pub p: f64,
    pub q: f64,
    pub iterations: usize,
    pub residual: f64,
}

pub const FIXED_POINT_TOLERANCE: f64 = 1e-9;
pub const FIXED_POINT_MAX_ITER: usize = 100_000;
pub const FIXED_POINT_DAMPING: f64 = 0.5;

/// Solves `Q = F(Q)` by damped iteration from `Q = 0`.
pub fn q_fixed_point(dist: &DegreeDistribution, cfg: &PercolationConfig) -> Result<FixedPoint> {
    if dist.tail_mass() > MAX_TAIL_MASS {
        return Err(Error::InvalidArgument(format!(
            "degree distribution tail mass {:e} exceeds {MAX_TAIL_MASS:e}",
            dist.tail_mass()
        )));
    }
    let lf = LnFactorials::new(dist.i_max() + 1);
    let mut q = 0.0f64;
    let mut residual = f64::INFINITY;
    for it in 0..FIXED_POINT_MAX_ITER {
        let f = q_map_with(dist, cfg, q, &lf).clamp(0.0, 1.0);
        residual = (f - q).abs();
        if residual <= FIXED_POINT_TOLERANCE {
            return Ok(FixedPoint {
                k: cfg.k,
                deleted: cfg.deleted,
                p: cfg.p(),
                q: f,
                iterations: it + 1,
                residual,
            });
        }
        q += FIXED_POINT_DAMPING * (f - q);
    }
    Err(Error::NoConvergence {
        iterations: FIXED_POINT_MAX_ITER,
        last: q,
        residual,
    })
}

/// Which innermost-core edges a sweep may delete.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// Neither endpoint in the corona.
    CaseI,
    /// At least one endpoint in the corona.
    CaseII,
    /// Any core edge.
    Uniform,
}

impl SweepMode {
    pub fn name(self) -> &'static str {
        match self {
            SweepMode::CaseI => "case_i",
            SweepMode::CaseII => "case_ii",
            SweepMode::Uniform => "uniform",
        }
    }
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "case_i" => Ok(SweepMode::CaseI),
            "case_ii" => Ok(SweepMode::CaseII),
            "uniform" => Ok(SweepMode::Uniform),
            other => Err(Error::InvalidArgument(format!(
                "unknown sweep mode '{other}' (valid: case_i, case_ii, uniform)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepOutcome {
    /// The original innermost core is empty.
    Collapsed,
    /// No eligible edge was left before collapse.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sweep {
    pub mode: SweepMode,
    pub k: usize,
    /// State before the first round.
    pub initial: QSample,
    /// One sample per round.
    pub trajectory: QTrajectory,
    pub outcome: SweepOutcome,
}

impl Sweep {
    /// Cumulative deletions at which the core vanished.
    pub fn collapse_nde(&self) -> Option<usize> {
        match self.outcome {
            SweepOutcome::Collapsed => self.trajectory.last().map(|s| s.nde),
            SweepOutcome::Exhausted => None,
        }
    }

    /// Per-round change in Q, starting from the initial state.
    pub fn q_deltas(&self) -> Vec<f64> {
        let mut prev = self.initial.q;
        self.trajectory
            .samples
            .iter()
            .map(|s| {
                let d = s.q - prev;
                prev = s.q;
                d
            })
            .collect()
    }

    /// `(round index, delta)` of the largest single-round increase in Q.
    pub fn largest_jump(&self) -> Option<(usize, f64)> {
        self.q_deltas()
            .into_iter()
            .enumerate()
            .fold(None, |best, (i, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((i, d)),
            })
    }

    /// CSV with header `round,mode,cum_nde,q_empirical,core_size,q_node`;
    /// round 0 is the initial state.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "round,mode,cum_nde,q_empirical,core_size,q_node")?;
        let rows = std::iter::once(&self.initial).chain(self.trajectory.samples.iter());
        for (round, s) in rows.enumerate() {
            writeln!(
                out,
                "{round},{},{},{:.6},{},{:.6}",
                self.mode, s.nde, s.q, s.core_size, s.q_node
            )?;
        }
        Ok(())
    }
}

/// Deletes `step` eligible innermost-core edges per round, chosen uniformly
/// without replacement, until the original innermost core is gone or no
/// eligible edge remains. Eligibility is judged against the corona of the
/// current core at the start of each round.
pub fn deletion_sweep(g: &Graph, mode: SweepMode, step: usize, seed: u64) -> Result<Sweep> {
    if step == 0 {
        return Err(Error::InvalidArgument("sweep step must be positive".into()));
    }
    if g.edge_count() == 0 {
        return Err(Error::NoCore);
    }
    let k = core_decompose(g).k_max;
    let mut tracker = CoreTracker::new(g.clone(), k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let snapshot = |t: &CoreTracker, nde: usize| QSample {
        nde,
        q: t.q_endpoint(),
        core_size: t.core_size(),
        q_node: t.q_node(),
    };
    let initial = snapshot(&tracker, 0);
    let mut trajectory = QTrajectory::new();
    let mut nde = 0;

    let outcome = loop {
        if tracker.is_collapsed() {
            break SweepOutcome::Collapsed;
        }
        let mut eligible: Vec<Edge> = tracker
            .core_edges()
            .into_iter()
            .filter(|&(u, v)| {
                let corona_ends = usize::from(tracker.is_corona(u)) + usize::from(tracker.is_corona(v));
                match mode {
                    SweepMode::CaseI => corona_ends == 0,
                    SweepMode::CaseII => corona_ends > 0,
                    SweepMode::Uniform => true,
                }
            })
            .collect();
        if eligible.is_empty() {
            break SweepOutcome::Exhausted;
        }
        let take = step.min(eligible.len());
        let (chosen, _) = eligible.partial_shuffle(&mut rng, take);
        for &(u, v) in chosen.iter() {
            tracker.delete_edge(u, v)?;
        }
        nde += take;
        trajectory.record(snapshot(&tracker, nde));
    };

    Ok(Sweep {
        mode,
        k,
        initial,
        trajectory,
        outcome,
    })
}
