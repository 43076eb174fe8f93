use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::Args;
use coreattack::metrics::format_percent;
use coreattack::{run_strategy, AttackResult, Graph, Strategy};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{self, Format};
use crate::seeds;

#[derive(Debug, Args)]
pub struct AttackArgs {
    /// Edge-list file, one `u v` pair per line.
    #[arg(long)]
    pub input: PathBuf,
    /// Strategies, comma-separated or repeated: red, hde, hdn, ckc, coreattack, greedy, or all.
    #[arg(long, value_delimiter = ',', required = true)]
    pub strategy: Vec<String>,
    /// Seeds for randomized strategies: `a..b` (inclusive), `a,b,c`, or a mix.
    #[arg(long)]
    pub seeds: Option<String>,
    #[arg(long, default_value = "results")]
    pub output: PathBuf,
    /// Format of the per-strategy summary file.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Allow graphs above the size guard.
    #[arg(long)]
    pub big: bool,
}

pub fn parse_strategies(names: &[String]) -> Result<Vec<Strategy>> {
    let mut out = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(Strategy::ALL);
        } else {
            out.push(name.parse::<Strategy>().map_err(|e| anyhow!("{e} (or 'all')"))?);
        }
    }
    if out.is_empty() {
        return Err(anyhow!("no strategy given"));
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(*s));
    Ok(out)
}

/// `(strategy, seed)` cells; deterministic strategies run once.
pub fn cells(strategies: &[Strategy], seeds: &[u64]) -> Vec<(Strategy, Option<u64>)> {
    let mut out = Vec::new();
    for &s in strategies {
        if s.is_randomized() {
            out.extend(seeds.iter().map(|&seed| (s, Some(seed))));
        } else {
            out.push((s, None));
        }
    }
    out
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("starting worker threads")
}

pub fn run_cells(pool: &rayon::ThreadPool, g: &Graph, cells: &[(Strategy, Option<u64>)]) -> Result<Vec<AttackResult>> {
    pool.install(|| {
        cells
            .par_iter()
            .map(|&(s, seed)| run_strategy(s, g, seed.unwrap_or(0)).with_context(|| format!("running {s}")))
            .collect()
    })
}

pub fn seed_tag(r: &AttackResult) -> String {
    r.seed.map_or_else(|| "det".to_string(), |s| s.to_string())
}

/// One row per strategy over all of its runs. The best run has the fewest
/// deleted edges, then nodes; earlier seeds win ties.
#[derive(Debug, Clone, Serialize)]
pub struct StrategySummary {
    pub network: String,
    pub strategy: Strategy,
    /// Run count, or `det` for deterministic strategies.
    pub runs: String,
    pub ndn: usize,
    pub nde_best: usize,
    pub nde_mean: f64,
    pub ecr_pct_best: String,
    pub ecr_pct_mean: String,
    pub far_pct_best: String,
    pub far_pct_mean: String,
}

impl StrategySummary {
    pub const HEADER: [&'static str; 10] = [
        "network",
        "strategy",
        "runs",
        "ndn",
        "nde_best",
        "nde_mean",
        "ecr_pct_best",
        "ecr_pct_mean",
        "far_pct_best",
        "far_pct_mean",
    ];

    pub fn cells(&self) -> Vec<String> {
        vec![
            self.network.clone(),
            self.strategy.to_string(),
            self.runs.clone(),
            self.ndn.to_string(),
            self.nde_best.to_string(),
            format!("{:.2}", self.nde_mean),
            self.ecr_pct_best.clone(),
            self.ecr_pct_mean.clone(),
            self.far_pct_best.clone(),
            self.far_pct_mean.clone(),
        ]
    }
}

pub fn summarize_runs(network: &str, results: &[AttackResult]) -> Vec<StrategySummary> {
    let mut order: Vec<Strategy> = Vec::new();
    for r in results {
        if !order.contains(&r.strategy) {
            order.push(r.strategy);
        }
    }
    order
        .into_iter()
        .map(|s| {
            let runs: Vec<&AttackResult> = results.iter().filter(|r| r.strategy == s).collect();
            let best = runs.iter().min_by_key(|r| (r.nde(), r.ndn())).expect("at least one run");
            let n = runs.len() as u64;
            let sum_nde: u64 = runs.iter().map(|r| r.nde() as u64).sum();
            let sum_far: u64 = runs.iter().map(|r| r.metrics.far_changed as u64).sum();
            let m = &best.metrics;
            StrategySummary {
                network: network.to_string(),
                strategy: s,
                runs: if s.is_randomized() { n.to_string() } else { "det".to_string() },
                ndn: best.ndn(),
                nde_best: best.nde(),
                nde_mean: sum_nde as f64 / n as f64,
                ecr_pct_best: m.ecr_pct.clone(),
                ecr_pct_mean: format_percent(sum_nde, n * m.total_edges as u64),
                far_pct_best: m.far_pct.clone(),
                far_pct_mean: format_percent(sum_far, n * m.far_denominator as u64),
            }
        })
        .collect()
}

pub fn write_summary(path: &std::path::Path, rows: &[StrategySummary], format: Format) -> Result<()> {
    match format {
        Format::Json => io::write_json(path, &serde_json::to_value(rows)?),
        Format::Csv => io::write_file(path, |out| {
            writeln!(out, "{}", StrategySummary::HEADER.join(","))?;
            for row in rows {
                writeln!(out, "{}", row.cells().join(","))?;
            }
            Ok(())
        }),
    }
}

pub fn run(args: &AttackArgs) -> Result<()> {
    let strategies = parse_strategies(&args.strategy)?;
    let seeds = seeds::resolve(args.seeds.as_deref(), strategies.iter().any(|s| s.is_randomized()))?;
    let g = io::load_graph(&args.input, args.big)?;
    let network = io::dataset_name(&args.input);
    let dir = io::output_dir(&args.output)?;

    let cells = cells(&strategies, &seeds);
    let results = run_cells(&thread_pool(args.jobs)?, &g, &cells)?;

    for r in &results {
        let stem = format!("{network}__{}__{}", r.strategy, seed_tag(r));
        let csv_name = format!("{stem}.csv");
        io::write_file(&dir.join(&csv_name), |out| r.trajectory.write_csv(out))?;
        io::write_json(&dir.join(format!("{stem}.json")), &r.to_json(&g, &network, Some(&csv_name)))?;
    }

    let rows = summarize_runs(&network, &results);
    write_summary(&dir.join(format!("{network}__summary.{}", args.format.ext())), &rows, args.format)?;
    let cells: Vec<Vec<String>> = rows.iter().map(StrategySummary::cells).collect();
    print!("{}", io::aligned_table(&StrategySummary::HEADER, &cells));
    Ok(())
}
