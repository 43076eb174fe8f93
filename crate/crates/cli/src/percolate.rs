use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use coreattack::percolation::{
    deletion_sweep, er_graph, q_fixed_point, DegreeDistribution, FixedPoint, PercolationConfig, Sweep,
    SweepMode,
};
use coreattack::{core_decompose, Graph};
use rayon::prelude::*;

use crate::attack::thread_pool;
use crate::io::{self, Format};
use crate::seeds;

#[derive(Debug, Args)]
pub struct PercolateArgs {
    /// Edge-list file to sweep.
    #[arg(long, conflicts_with = "er")]
    pub input: Option<PathBuf>,
    /// Erdős–Rényi G(n, m) per seed, given as `n,m`.
    #[arg(long, value_parser = parse_er)]
    pub er: Option<(usize, usize)>,
    /// Which innermost-core edges each round may delete.
    #[arg(long, value_parser = parse_mode, default_value = "case_ii")]
    pub mode: SweepMode,
    /// Run case_ii and uniform on every seed and report which collapses first.
    #[arg(long)]
    pub compare: bool,
    /// Edges deleted per round.
    #[arg(long, default_value_t = 1)]
    pub step: usize,
    #[arg(long)]
    pub seeds: Option<String>,
    /// Also solve the mean-field fixed point for Q.
    #[arg(long)]
    pub theory: bool,
    /// Poisson mean degree for the theory; defaults to the graph's degree
    /// distribution.
    #[arg(long)]
    pub poisson_mean: Option<f64>,
    /// Core index for the theory; defaults to the graph's k_max.
    #[arg(long)]
    pub k: Option<usize>,
    /// Deleted fractions of all edges for the theory, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "0.05")]
    pub del_frac: Vec<f64>,
    /// Edge count for theory-only runs, which sets the resolution of L.
    #[arg(long, default_value_t = 1_000_000)]
    pub total_edges: usize,
    #[arg(long, default_value = "results")]
    pub output: PathBuf,
    /// Sweep file format.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub big: bool,
}

fn parse_er(s: &str) -> Result<(usize, usize), String> {
    let (n, m) = s.split_once(',').ok_or("expected n,m")?;
    let n = n.trim().parse().map_err(|_| format!("bad node count '{n}'"))?;
    let m = m.trim().parse().map_err(|_| format!("bad edge count '{m}'"))?;
    Ok((n, m))
}

fn parse_mode(s: &str) -> Result<SweepMode, String> {
    s.parse().map_err(|e: coreattack::Error| e.to_string())
}

/// Where sweep graphs come from.
enum Source {
    File { name: String, graph: Graph },
    Er { n: usize, m: usize },
}

impl Source {
    fn name(&self) -> String {
        match self {
            Source::File { name, .. } => name.clone(),
            Source::Er { n, m } => format!("er-{n}-{m}"),
        }
    }

    fn graph(&self, seed: u64) -> Result<Graph> {
        match self {
            Source::File { graph, .. } => Ok(graph.clone()),
            Source::Er { n, m } => Ok(er_graph(*n, *m, seed)?),
        }
    }
}

fn write_sweep(dir: &Path, network: &str, seed: u64, sweep: &Sweep, format: Format) -> Result<()> {
    let path = dir.join(format!("{network}__{}__{seed}.{}", sweep.mode, format.ext()));
    match format {
        Format::Csv => io::write_file(&path, |out| sweep.write_csv(out)),
        Format::Json => io::write_json(&path, &serde_json::to_value(sweep)?),
    }
}

fn theory(args: &PercolateArgs, source: Option<&Source>) -> Result<Vec<FixedPoint>> {
    let sample = source.map(|s| s.graph(seeds::DEFAULT_SEED)).transpose()?;
    let dist = match (args.poisson_mean, source, &sample) {
        (Some(mean), _, _) => DegreeDistribution::poisson(mean)?,
        (None, Some(Source::Er { n, m }), _) => DegreeDistribution::poisson(2.0 * *m as f64 / *n as f64)?,
        (None, _, Some(g)) => DegreeDistribution::of_graph(g)?,
        (None, _, None) => bail!("--theory without a graph needs --poisson-mean"),
    };
    let k = match (args.k, &sample) {
        (Some(k), _) => k,
        (None, Some(g)) => core_decompose(g).k_max,
        (None, None) => bail!("--theory without a graph needs --k"),
    };
    let total = sample.as_ref().map_or(args.total_edges, Graph::edge_count);
    args.del_frac
        .iter()
        .map(|&f| {
            if !(0.0..=1.0).contains(&f) {
                bail!("deletion fraction {f} is outside [0, 1]");
            }
            let deleted = (f * total as f64).round() as usize;
            let cfg = PercolationConfig::new(k, deleted, total)?;
            q_fixed_point(&dist, &cfg).with_context(|| format!("fixed point at deletion fraction {f}"))
        })
        .collect()
}

pub fn run(args: &PercolateArgs) -> Result<()> {
    if args.step == 0 {
        bail!("--step must be positive");
    }
    let source = match (&args.input, args.er) {
        (Some(path), _) => Some(Source::File {
            name: io::dataset_name(path),
            graph: io::load_graph(path, args.big)?,
        }),
        (None, Some((n, m))) => Some(Source::Er { n, m }),
        (None, None) if args.theory => None,
        (None, None) => bail!("give --input or --er (or --theory alone)"),
    };
    let dir = io::output_dir(&args.output)?;

    if let Some(src) = &source {
        let network = src.name();
        let seeds = seeds::resolve(args.seeds.as_deref(), true)?;
        let modes: Vec<SweepMode> = if args.compare { vec![SweepMode::CaseII, SweepMode::Uniform] } else { vec![args.mode] };
        let sweeps: Vec<Vec<Sweep>> = thread_pool(args.jobs)?.install(|| {
            seeds
                .par_iter()
                .map(|&seed| -> Result<Vec<Sweep>> {
                    let g = src.graph(seed)?;
                    io::guard_size(&g, args.big)?;
                    modes.iter().map(|&mode| Ok(deletion_sweep(&g, mode, args.step, seed)?)).collect()
                })
                .collect::<Result<_>>()
        })?;
        for (seed, per_mode) in seeds.iter().zip(&sweeps) {
            for sweep in per_mode {
                write_sweep(&dir, &network, *seed, sweep, args.format)?;
            }
        }
        if args.compare {
            compare_report(&dir, &network, &seeds, &sweeps)?;
        } else {
            println!("wrote {} {} sweeps for {network}", seeds.len(), args.mode);
        }
    }

    if args.theory {
        let points = theory(args, source.as_ref())?;
        let name = source.as_ref().map_or_else(|| "theory".to_string(), Source::name);
        let value = if points.len() == 1 { serde_json::to_value(points[0])? } else { serde_json::to_value(&points)? };
        io::write_json(&dir.join(format!("{name}__fixed_point.json")), &value)?;
        println!("{}", serde_json::to_string_pretty(&value)?);
    }
    Ok(())
}

fn compare_report(dir: &Path, network: &str, seeds: &[u64], sweeps: &[Vec<Sweep>]) -> Result<()> {
    let mut first = 0;
    let mut rows = Vec::new();
    for (seed, pair) in seeds.iter().zip(sweeps) {
        let (targeted, uniform) = (&pair[0], &pair[1]);
        let a = targeted.collapse_nde();
        let b = uniform.collapse_nde();
        let earlier = matches!((a, b), (Some(a), Some(b)) if a < b);
        first += usize::from(earlier);
        let jump = targeted.largest_jump().map_or(0.0, |(_, d)| d);
        let show = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
        rows.push(format!("{seed},{},{},{jump:.6},{earlier}", show(a), show(b)));
    }
    io::write_file(&dir.join(format!("{network}__compare.csv")), |out| {
        writeln!(out, "seed,case_ii_collapse_nde,uniform_collapse_nde,case_ii_max_jump,case_ii_first")?;
        for row in &rows {
            writeln!(out, "{row}")?;
        }
        Ok(())
    })?;
    println!("case_ii collapses before uniform on {first}/{} seeds", seeds.len());
    Ok(())
}
