use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use coreattack::{run_strategy, AttackResult, Graph, Strategy};
use rayon::prelude::*;
use serde::Deserialize;

use crate::attack::{parse_strategies, summarize_runs, thread_pool, write_summary, StrategySummary};
use crate::io::{self, Format};
use crate::seeds;

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// TOML file listing datasets, strategies and seeds.
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long, default_value = "results")]
    pub output: PathBuf,
    /// Extra machine-readable copy of the table.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub big: bool,
}

/// ```toml
/// seeds = "1..20"
/// strategies = ["red", "greedy"]   # default: all six
///
/// [[datasets]]
/// name = "dolphin"
/// path = "dolphins.txt"           # relative to the manifest
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub seeds: Option<String>,
    pub strategies: Option<Vec<String>>,
    pub datasets: Vec<DatasetEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetEntry {
    pub name: Option<String>,
    pub path: PathBuf,
}

pub fn load_manifest(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let manifest: Manifest = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if manifest.datasets.is_empty() {
        bail!("{} lists no datasets", path.display());
    }
    Ok(manifest)
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let manifest = load_manifest(&args.manifest)?;
    let base = args.manifest.parent().unwrap_or(Path::new("."));
    let strategies = match &manifest.strategies {
        Some(names) => parse_strategies(names)?,
        None => Strategy::ALL.to_vec(),
    };
    let seeds = seeds::resolve(manifest.seeds.as_deref(), strategies.iter().any(|s| s.is_randomized()))?;

    let mut datasets: Vec<(String, Graph)> = Vec::new();
    for entry in &manifest.datasets {
        let path = base.join(&entry.path);
        let name = entry.name.clone().unwrap_or_else(|| io::dataset_name(&path));
        match io::load_graph(&path, args.big) {
            Ok(g) if g.edge_count() > 0 => datasets.push((name, g)),
            Ok(_) => eprintln!("warning: skipping {name}: no edges"),
            Err(e) => eprintln!("warning: skipping {name}: {e:#}"),
        }
    }
    if datasets.is_empty() {
        bail!("no dataset in {} could be loaded", args.manifest.display());
    }

    let cells: Vec<(usize, Strategy, Option<u64>)> = datasets
        .iter()
        .enumerate()
        .flat_map(|(d, _)| crate::attack::cells(&strategies, &seeds).into_iter().map(move |(s, seed)| (d, s, seed)))
        .collect();
    let results: Vec<AttackResult> = thread_pool(args.jobs)?.install(|| {
        cells
            .par_iter()
            .map(|&(d, s, seed)| {
                let (name, g) = &datasets[d];
                run_strategy(s, g, seed.unwrap_or(0)).with_context(|| format!("{name}: {s}"))
            })
            .collect::<Result<_>>()
    })?;

    let mut rows: Vec<StrategySummary> = Vec::new();
    for (d, (name, _)) in datasets.iter().enumerate() {
        let mine: Vec<AttackResult> = cells
            .iter()
            .zip(&results)
            .filter(|((cd, _, _), _)| *cd == d)
            .map(|(_, r)| r.clone())
            .collect();
        rows.extend(summarize_runs(name, &mine));
    }

    let dir = io::output_dir(&args.output)?;
    write_summary(&dir.join("bench.csv"), &rows, Format::Csv)?;
    if args.format == Format::Json {
        write_summary(&dir.join("bench.json"), &rows, Format::Json)?;
    }
    let cells: Vec<Vec<String>> = rows.iter().map(StrategySummary::cells).collect();
    let table = io::aligned_table(&StrategySummary::HEADER, &cells);
    io::write_file(&dir.join("bench.txt"), |out| out.write_all(table.as_bytes()))?;
    print!("{table}");
    Ok(())
}
