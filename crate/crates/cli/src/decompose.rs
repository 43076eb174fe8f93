use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use coreattack::{core_decompose, summarize};

use crate::io::{self, Format};

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "results")]
    pub output: PathBuf,
    /// Format of the summary file; core numbers are always CSV.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub big: bool,
}

/// Writes per-node core numbers and prints `|V|,|E|,k_max,|V_I|,|E_I|`.
pub fn run(args: &DecomposeArgs) -> Result<()> {
    let g = io::load_graph(&args.input, args.big)?;
    let network = io::dataset_name(&args.input);
    let dir = io::output_dir(&args.output)?;
    let dec = core_decompose(&g);
    let summary = summarize(&g, &dec);

    io::write_file(&dir.join(format!("{network}__cores.csv")), |out| dec.write_csv(&g, out))?;
    let summary_path = dir.join(format!("{network}__decompose.{}", args.format.ext()));
    match args.format {
        Format::Json => {
            let mut value = serde_json::to_value(summary)?;
            value["network"] = network.clone().into();
            io::write_json(&summary_path, &value)?;
        }
        Format::Csv => io::write_file(&summary_path, |out| {
            writeln!(out, "network,nodes,edges,k_max,core_nodes,core_edges")?;
            writeln!(out, "{network},{summary}")
        })?,
    }
    println!("{summary}");
    Ok(())
}
