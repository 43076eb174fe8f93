//! Edge- and node-deletion attacks that empty the innermost core.
//!
//! Every strategy works on a [`CoreTracker`] holding the `I`-core of the
//! working graph, where `I` is the degeneracy of the *original* graph. An
//! attack is finished once that `I`-core is empty.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cores::{core_decompose, CoreDecomposition};
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, NodeId};
use crate::metrics::{compute_metrics, MetricsReport, QSample, QTrajectory};
use crate::tracker::CoreTracker;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Red,
    Hde,
    Hdn,
    Ckc,
    #[serde(rename = "coreattack")]
    CoreAttack,
    Greedy,
    Exhaustive,
}

impl Strategy {
    /// The six strategies selectable from the command line.
    pub const ALL: [Strategy; 6] = [
        Strategy::Red,
        Strategy::Hde,
        Strategy::Hdn,
        Strategy::Ckc,
        Strategy::CoreAttack,
        Strategy::Greedy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Red => "red",
            Strategy::Hde => "hde",
            Strategy::Hdn => "hdn",
            Strategy::Ckc => "ckc",
            Strategy::CoreAttack => "coreattack",
            Strategy::Greedy => "greedy",
            Strategy::Exhaustive => "exhaustive",
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(self, Strategy::Red | Strategy::CoreAttack | Strategy::Greedy)
    }

    pub fn deletes_nodes(self) -> bool {
        matches!(self, Strategy::Hdn | Strategy::Ckc)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s.to_ascii_lowercase())
            .ok_or_else(|| {
                let names: Vec<&str> = Strategy::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidArgument(format!("unknown strategy '{s}' (valid: {})", names.join(", ")))
            })
    }
}

/// Nodes expelled from the innermost core when one edge is deleted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GainerSet {
    pub edge: Edge,
    pub gainers: Vec<NodeId>,
}

/// Gainer set of `e` with respect to the `i`-core of `g`.
pub fn gainer_set(g: &Graph, i: usize, e: Edge) -> Result<GainerSet> {
    let tracker = CoreTracker::new(g.clone(), i);
    let gainers = tracker.gainers(e.0, e.1)?;
    Ok(GainerSet {
        edge: canonical(e.0, e.1),
        gainers,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttackResult {
    pub strategy: Strategy,
    pub seed: Option<u64>,
    /// Every deleted edge in deletion order. For node strategies these are
    /// the edges incident to the removed nodes.
    pub deleted_edges: Vec<Edge>,
    pub deleted_nodes: Vec<NodeId>,
    pub trajectory: QTrajectory,
    pub metrics: MetricsReport,
}

impl AttackResult {
    pub fn nde(&self) -> usize {
        self.deleted_edges.len()
    }

    pub fn ndn(&self) -> usize {
        self.deleted_nodes.len()
    }

    /// The original graph with the attack applied.
    pub fn attacked_graph(&self, original: &Graph) -> Result<Graph> {
        original.delete_edges(&self.deleted_edges)
    }

    /// JSON document with edges and nodes translated to external labels.
    pub fn to_json(&self, g: &Graph, network: &str, trajectory_file: Option<&str>) -> serde_json::Value {
        let edges: Vec<[&str; 2]> = self
            .deleted_edges
            .iter()
            .map(|&(u, v)| [g.label(u), g.label(v)])
            .collect();
        let nodes: Vec<&str> = self.deleted_nodes.iter().map(|&v| g.label(v)).collect();
        serde_json::json!({
            "network": network,
            "strategy": self.strategy,
            "seed": self.seed,
            "deleted_edges": edges,
            "deleted_nodes": nodes,
            "metrics": self.metrics,
            "trajectory": trajectory_file,
        })
    }
}

/// Shared bookkeeping for one attack run.
struct Run<'a> {
    original: &'a Graph,
    decomp: CoreDecomposition,
    tracker: CoreTracker,
    deleted_edges: Vec<Edge>,
    deleted_nodes: Vec<NodeId>,
    trajectory: QTrajectory,
}

impl<'a> Run<'a> {
    fn start(g: &'a Graph) -> Result<Self> {
        if g.edge_count() == 0 {
            return Err(Error::NoCore);
        }
        let decomp = core_decompose(g);
        let tracker = CoreTracker::new(g.clone(), decomp.k_max);
        Ok(Run {
            original: g,
            decomp,
            tracker,
            deleted_edges: Vec::new(),
            deleted_nodes: Vec::new(),
            trajectory: QTrajectory::new(),
        })
    }

    fn sample(&mut self) {
        self.trajectory.record(QSample {
            nde: self.deleted_edges.len(),
            q: self.tracker.q_endpoint(),
            core_size: self.tracker.core_size(),
            q_node: self.tracker.q_node(),
        });
    }

    fn delete_edge(&mut self, e: Edge) {
        self.tracker.delete_edge(e.0, e.1).expect("attack deletes existing edges");
        self.deleted_edges.push(canonical(e.0, e.1));
        self.sample();
    }

    fn delete_node(&mut self, v: NodeId) {
        let removed = self.tracker.remove_node(v);
        self.deleted_edges.extend(removed);
        self.deleted_nodes.push(v);
        self.sample();
    }

    fn finish(self, strategy: Strategy, seed: Option<u64>) -> Result<AttackResult> {
        debug_assert!(self.tracker.is_collapsed());
        let attacked = self.tracker.into_graph();
        let metrics = compute_metrics(self.original, &self.decomp, &attacked, &self.deleted_nodes)?;
        Ok(AttackResult {
            strategy,
            seed,
            deleted_edges: self.deleted_edges,
            deleted_nodes: self.deleted_nodes,
            trajectory: self.trajectory,
            metrics,
        })
    }
}

/// Set of node ids supporting uniform sampling and O(1) removal. Iteration
/// order depends only on the insertion order and the removal history.
struct SampleSet {
    items: Vec<NodeId>,
    pos: Vec<usize>,
}

impl SampleSet {
    fn new(universe: usize, items: Vec<NodeId>) -> Self {
        let mut pos = vec![usize::MAX; universe];
        for (i, &v) in items.iter().enumerate() {
            pos[v] = i;
        }
        SampleSet { items, pos }
    }

    fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn remove(&mut self, v: NodeId) {
        let i = self.pos[v];
        if i == usize::MAX {
            return;
        }
        let last = *self.items.last().unwrap();
        self.items.swap_remove(i);
        if last != v {
            self.pos[last] = i;
        }
        self.pos[v] = usize::MAX;
    }

    fn choose(&self, rng: &mut impl Rng) -> NodeId {
        self.items[rng.gen_range(0..self.items.len())]
    }
}

/// Draws a corona node of the working set and one of its core neighbors.
fn sample_corona_edge(tracker: &CoreTracker, working: &SampleSet, rng: &mut impl Rng) -> Edge {
    let vi = working.choose(rng);
    let nbrs: Vec<NodeId> = tracker.core_neighbors(vi).collect();
    let vj = nbrs[rng.gen_range(0..nbrs.len())];
    (vi, vj)
}

/// COREATTACK: cover the corona with the gainer sets of randomly sampled
/// corona edges, delete the whole batch, re-extract the core, repeat.
pub fn core_attack(g: &Graph, seed: u64) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.node_count();
    while !run.tracker.is_collapsed() {
        let mut working = SampleSet::new(n, run.tracker.corona());
        let mut batch = Vec::new();
        // gainer sets are taken against the core as it stood when the batch began
        while !working.is_empty() {
            let (vi, vj) = sample_corona_edge(&run.tracker, &working, &mut rng);
            for v in run.tracker.gainers(vi, vj)? {
                working.remove(v);
            }
            batch.push((vi, vj));
        }
        for e in batch {
            run.delete_edge(e);
        }
    }
    run.finish(Strategy::CoreAttack, Some(seed))
}

/// GreedyCOREATTACK: sample corona edges as in [`core_attack`] but delete only
/// the one with the largest gainer set (the bomb edge) per iteration.
pub fn greedy_core_attack(g: &Graph, seed: u64) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.node_count();
    while !run.tracker.is_collapsed() {
        let mut working = SampleSet::new(n, run.tracker.corona());
        let mut best: Option<(usize, Edge)> = None;
        while !working.is_empty() {
            let (vi, vj) = sample_corona_edge(&run.tracker, &working, &mut rng);
            let gainers = run.tracker.gainers(vi, vj)?;
            if best.map_or(true, |(tau, _)| gainers.len() > tau) {
                best = Some((gainers.len(), (vi, vj)));
            }
            for v in gainers {
                working.remove(v);
            }
        }
        let (_, bomb) = best.expect("innermost core has a nonempty corona");
        run.delete_edge(bomb);
    }
    run.finish(Strategy::Greedy, Some(seed))
}

/// RED: delete a uniformly random innermost-core edge until collapse.
pub fn red_attack(g: &Graph, seed: u64) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while !run.tracker.is_collapsed() {
        let edges = run.tracker.core_edges();
        let e = edges[rng.gen_range(0..edges.len())];
        run.delete_edge(e);
    }
    run.finish(Strategy::Red, Some(seed))
}

/// HDE: delete the core edge with the largest sum of endpoint core degrees,
/// ties to the smallest canonical pair.
pub fn hde_attack(g: &Graph) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    while !run.tracker.is_collapsed() {
        let t = &run.tracker;
        let mut best: Option<(usize, Edge)> = None;
        for (u, v) in t.core_edges() {
            let score = t.core_degree(u) + t.core_degree(v);
            if best.map_or(true, |(s, _)| score > s) {
                best = Some((score, (u, v)));
            }
        }
        run.delete_edge(best.unwrap().1);
    }
    run.finish(Strategy::Hde, None)
}

/// HDN: remove the node of highest core degree (ties to the smallest id)
/// together with all its edges until collapse.
pub fn hdn_attack(g: &Graph) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    while !run.tracker.is_collapsed() {
        let t = &run.tracker;
        let v = t
            .core_nodes()
            .into_iter()
            .max_by(|&a, &b| t.core_degree(a).cmp(&t.core_degree(b)).then(b.cmp(&a)))
            .unwrap();
        run.delete_node(v);
    }
    run.finish(Strategy::Hdn, None)
}

/// CKC: per round, greedily choose core nodes whose removal knocks every
/// corona node out of the core (a node covers itself if it is in the corona
/// and each corona neighbor), remove them, repeat until collapse.
pub fn ckc_attack(g: &Graph) -> Result<AttackResult> {
    let mut run = Run::start(g)?;
    let n = g.node_count();
    while !run.tracker.is_collapsed() {
        let picks = {
            let t = &run.tracker;
            let mut uncovered = vec![false; n];
            let mut remaining = 0;
            for v in t.corona() {
                uncovered[v] = true;
                remaining += 1;
            }
            let candidates = t.core_nodes();
            let coverage = |x: NodeId, uncovered: &[bool]| {
                usize::from(uncovered[x]) + t.core_neighbors(x).filter(|&y| uncovered[y]).count()
            };
            let mut picks = Vec::new();
            while remaining > 0 {
                let mut best: Option<(usize, NodeId)> = None;
                for &x in &candidates {
                    let c = coverage(x, &uncovered);
                    if c > 0 && best.map_or(true, |(bc, _)| c > bc) {
                        best = Some((c, x));
                    }
                }
                let (_, x) = best.expect("every corona node covers itself");
                if uncovered[x] {
                    uncovered[x] = false;
                    remaining -= 1;
                }
                for y in t.core_neighbors(x) {
                    if uncovered[y] {
                        uncovered[y] = false;
                        remaining -= 1;
                    }
                }
                picks.push(x);
            }
            picks
        };
        for v in picks {
            // an earlier removal may already have pushed it out
            if run.tracker.in_core(v) {
                run.delete_node(v);
            }
        }
    }
    run.finish(Strategy::Ckc, None)
}

/// Runs `strategy`; `seed` is ignored by the deterministic ones.
pub fn run_strategy(strategy: Strategy, g: &Graph, seed: u64) -> Result<AttackResult> {
    match strategy {
        Strategy::Red => red_attack(g, seed),
        Strategy::Hde => hde_attack(g),
        Strategy::Hdn => hdn_attack(g),
        Strategy::Ckc => ckc_attack(g),
        Strategy::CoreAttack => core_attack(g, seed),
        Strategy::Greedy => greedy_core_attack(g, seed),
        Strategy::Exhaustive => exhaustive_min_attack(g, EXHAUSTIVE_MAX_DEPTH),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackBudgetEstimate {
    pub d: usize,
    /// Number of edge subsets of size `1..=d` drawn from the core edges.
    pub combination_count: BigUint,
}

/// Size of the exhaustive search space for attacks of up to `d` edges.
pub fn budget_estimate(core_edges: usize, d: usize) -> Result<AttackBudgetEstimate> {
    if d > core_edges {
        return Err(Error::InvalidArgument(format!(
            "budget d = {d} exceeds the {core_edges} innermost-core edges"
        )));
    }
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    for i in 1..=d {
        binom = binom * BigUint::from(core_edges - i + 1) / BigUint::from(i);
        total += &binom;
    }
    Ok(AttackBudgetEstimate {
        d,
        combination_count: total,
    })
}

pub const EXHAUSTIVE_MAX_CORE_EDGES: usize = 20;
pub const EXHAUSTIVE_MAX_DEPTH: usize = 4;

/// Minimum-cardinality edge attack by enumerating all core-edge subsets of
/// size `1..=d_max`. Only for tiny cores.
pub fn exhaustive_min_attack(g: &Graph, d_max: usize) -> Result<AttackResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoCore);
    }
    let decomp = core_decompose(g);
    let i = decomp.k_max;
    let in_core: Vec<bool> = decomp.core_number.iter().map(|&c| c >= i).collect();
    let core_edges: Vec<Edge> = g.edges().filter(|&(u, v)| in_core[u] && in_core[v]).collect();
    if core_edges.len() > EXHAUSTIVE_MAX_CORE_EDGES {
        return Err(Error::BoundExceeded(format!(
            "innermost core has {} edges; exhaustive search is limited to {}",
            core_edges.len(),
            EXHAUSTIVE_MAX_CORE_EDGES
        )));
    }
    if d_max > EXHAUSTIVE_MAX_DEPTH {
        return Err(Error::BoundExceeded(format!(
            "depth {d_max} exceeds the exhaustive limit of {EXHAUSTIVE_MAX_DEPTH}"
        )));
    }

    let collapses = |subset: &[Edge]| -> bool {
        let h = g.delete_edges(subset).expect("core edges exist");
        core_decompose(&h).k_max < i
    };
    let m = core_edges.len();
    for d in 1..=d_max.min(m) {
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let subset: Vec<Edge> = idx.iter().map(|&j| core_edges[j]).collect();
            if collapses(&subset) {
                let mut run = Run::start(g)?;
                for e in subset {
                    run.delete_edge(e);
                }
                return run.finish(Strategy::Exhaustive, None);
            }
            // next combination in lexicographic order
            let mut p = d;
            while p > 0 && idx[p - 1] == m - d + p - 1 {
                p -= 1;
            }
            if p == 0 {
                break;
            }
            idx[p - 1] += 1;
            for q in p..d {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    Err(Error::NoAttackWithin(d_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::oracle::prune_k_core;
    use crate::testutil::gnp;

    fn assert_collapsed(g: &Graph, r: &AttackResult) {
        let i = core_decompose(g).k_max;
        let h = r.attacked_graph(g).unwrap();
        assert!(core_decompose(&h).k_max < i, "{} left the {i}-core standing", r.strategy);
        assert_eq!(r.nde(), r.metrics.nde);
        assert_eq!(r.ndn(), r.metrics.ndn);
    }

    fn all_runs(g: &Graph, seed: u64) -> Vec<AttackResult> {
        Strategy::ALL.iter().map(|&s| run_strategy(s, g, seed).unwrap()).collect()
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        let err = "bogus".parse::<Strategy>().unwrap_err().to_string();
        assert!(err.contains("red, hde, hdn, ckc, coreattack, greedy"), "{err}");
    }

    #[test]
    fn clique_collapses_after_one_edge() {
        let k5 = Graph::complete(5);
        for s in [Strategy::Red, Strategy::Hde, Strategy::CoreAttack, Strategy::Greedy] {
            let r = run_strategy(s, &k5, 3).unwrap();
            assert_eq!(r.nde(), 1, "{s}");
            assert_eq!(r.ndn(), 0);
            assert_eq!(r.trajectory.len(), 1);
            assert_eq!(r.trajectory.samples[0].q, 1.0);
            assert_eq!(r.trajectory.samples[0].core_size, 0);
        }
        let hdn = hdn_attack(&k5).unwrap();
        assert_eq!((hdn.ndn(), hdn.nde()), (1, 4));
        assert_eq!(hdn.deleted_nodes, vec![0]);
        let ckc = ckc_attack(&k5).unwrap();
        assert_eq!(ckc.ndn(), 1);
    }

    #[test]
    fn gainers_of_clique_edge_are_everything() {
        let gs = gainer_set(&Graph::complete(5), 4, (3, 1)).unwrap();
        assert_eq!(gs.edge, (1, 3));
        assert_eq!(gs.gainers, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn gainer_set_empty_for_robust_edge() {
        // K6 is a 5-core; in its 4-core view no edge deletion expels anyone
        let k6 = Graph::complete(6);
        assert!(gainer_set(&k6, 4, (0, 1)).unwrap().gainers.is_empty());
        // two K5s joined by a bridge: with I = 4 the bridge is outside the core
        let mut g = Graph::complete(5);
        for _ in 0..5 {
            g.add_node("x");
        }
        for u in 5..10 {
            for v in u + 1..10 {
                g.add_edge(u, v);
            }
        }
        g.add_edge(0, 5);
        assert!(matches!(gainer_set(&g, 4, (0, 5)).unwrap().gainers.len(), 0));
        assert!(matches!(gainer_set(&g, 5, (0, 1)), Err(Error::EdgeNotInCore(0, 1))));
    }

    #[test]
    fn gainer_set_matches_full_recomputation() {
        for seed in 0..50u64 {
            let g = gnp(15 + (seed as usize % 26), 0.25, 100 + seed);
            if g.edge_count() == 0 {
                continue;
            }
            let i = core_decompose(&g).k_max;
            let before = prune_k_core(&g, i);
            for (u, v) in g.edges().filter(|&(u, v)| before[u] && before[v]) {
                let h = g.delete_edges(&[(u, v)]).unwrap();
                let after = prune_k_core(&h, i);
                let expected: Vec<NodeId> = (0..g.node_count()).filter(|&x| before[x] && !after[x]).collect();
                assert_eq!(gainer_set(&g, i, (u, v)).unwrap().gainers, expected, "seed {seed} edge {u}-{v}");
            }
        }
    }

    #[test]
    fn every_strategy_collapses_random_graphs() {
        for seed in 0..25u64 {
            let g = gnp(35, 0.2, seed);
            let original_core = CoreTracker::new(g.clone(), core_decompose(&g).k_max);
            for r in all_runs(&g, seed) {
                assert_collapsed(&g, &r);
                let last = r.trajectory.last().unwrap();
                assert_eq!(last.nde, r.nde());
                assert_eq!(last.core_size, 0);
                if !r.strategy.deletes_nodes() {
                    assert_eq!(r.ndn(), 0);
                    for &(u, v) in &r.deleted_edges {
                        assert!(original_core.is_core_edge(u, v));
                    }
                } else {
                    for &v in &r.deleted_nodes {
                        assert!(original_core.in_core(v));
                    }
                }
            }
        }
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let g = gnp(40, 0.2, 77);
        for s in Strategy::ALL {
            assert_eq!(run_strategy(s, &g, 5).unwrap(), run_strategy(s, &g, 5).unwrap());
        }
    }

    #[test]
    fn hde_tie_goes_to_smallest_pair() {
        // a 4-cycle: every edge scores 4, the first is (0,1)
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = hde_attack(&c4).unwrap();
        assert_eq!(r.deleted_edges, vec![(0, 1)]);
    }

    #[test]
    fn star_center_removal_empties_one_core() {
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        let r = hdn_attack(&star).unwrap();
        assert_eq!(r.deleted_nodes, vec![0]);
        assert_eq!(r.nde(), 5);
    }

    #[test]
    fn ckc_single_corona_node() {
        // K4 on {0,1,2,3} with edge 0-1 subdivided by node 4: a 2-core whose
        // only degree-2 node is 4
        let g = Graph::from_edges(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = ckc_attack(&g).unwrap();
        // first round covers {4} with node 0; the triangle 1-2-3 needs a second round
        assert_eq!(r.deleted_nodes, vec![0, 1]);
        assert_collapsed(&g, &r);

        let mut g = Graph::complete(6);
        g.remove_edge(4, 5);
        let r = ckc_attack(&g).unwrap();
        assert_eq!(r.deleted_nodes, vec![0]);
        assert_collapsed(&g, &r);
    }

    #[test]
    fn budget_counts() {
        assert_eq!(budget_estimate(10, 1).unwrap().combination_count, BigUint::from(10u32));
        assert_eq!(budget_estimate(10, 2).unwrap().combination_count, BigUint::from(55u32));
        assert_eq!(budget_estimate(10, 0).unwrap().combination_count, BigUint::from(0u32));
        assert!(budget_estimate(3, 4).is_err());
    }

    /// Independent big-integer oracle: Pascal's triangle row.
    #[test]
    fn budget_matches_pascal_row() {
        let n = 109;
        let mut row = vec![BigUint::from(1u32)];
        for _ in 0..n {
            let mut next = vec![BigUint::from(1u32)];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigUint::from(1u32));
            row = next;
        }
        let expected: BigUint = row[1..=3].iter().sum();
        assert_eq!(budget_estimate(n, 3).unwrap().combination_count, expected);
        assert_eq!(expected, BigUint::from(109u32 + 5886 + 209934));
    }

    #[test]
    fn exhaustive_on_small_cliques() {
        assert_eq!(exhaustive_min_attack(&Graph::complete(5), 4).unwrap().nde(), 1);
        assert_eq!(exhaustive_min_attack(&Graph::complete(4), 4).unwrap().nde(), 1);
        // two disjoint K4s need two deletions
        let mut g = Graph::complete(4);
        for _ in 0..4 {
            g.add_node("y");
        }
        for u in 4..8 {
            for v in u + 1..8 {
                g.add_edge(u, v);
            }
        }
        let r = exhaustive_min_attack(&g, 4).unwrap();
        assert_eq!(r.nde(), 2);
        assert!(matches!(exhaustive_min_attack(&g, 1), Err(Error::NoAttackWithin(1))));
        assert!(matches!(exhaustive_min_attack(&g, 5), Err(Error::BoundExceeded(_))));
        assert!(matches!(exhaustive_min_attack(&Graph::complete(8), 2), Err(Error::BoundExceeded(_))));
    }
}
