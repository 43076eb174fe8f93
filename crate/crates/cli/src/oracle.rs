use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use coreattack::attack::{budget_estimate, exhaustive_min_attack, EXHAUSTIVE_MAX_DEPTH};
use coreattack::summarize;

use crate::io;

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Largest attack size to enumerate.
    #[arg(long, default_value_t = EXHAUSTIVE_MAX_DEPTH)]
    pub d_max: usize,
}

/// Exhaustive minimum edge attack on a tiny innermost core, printed as JSON.
pub fn run(args: &OracleArgs) -> Result<()> {
    let g = io::load_graph(&args.input, false)?;
    let network = io::dataset_name(&args.input);
    let summary = summarize(&g, &coreattack::core_decompose(&g));
    let budget = budget_estimate(summary.core_edges, args.d_max.min(summary.core_edges))?;
    let result = exhaustive_min_attack(&g, args.d_max)?;
    let mut doc = result.to_json(&g, &network, None);
    doc["combinations_bound"] = budget.combination_count.to_string().into();
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(())
}
