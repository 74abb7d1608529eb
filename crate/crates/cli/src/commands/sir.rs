use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use spreadrank::sir::{spreading_ability, SirConfig};

use super::with_threads;
use crate::output::{self, csv_field, fmt_f64, Format};
use crate::{dataset, SirArgs};

#[derive(Serialize)]
struct SirRow {
    node_label: String,
    beta: f64,
    ability: f64,
    runs: u32,
}

pub fn run(args: SirArgs) -> Result<()> {
    let (graph, _) = dataset::load(&args.dataset)?;
    let config = SirConfig::new(args.beta, args.seed)?
        .with_recovery_prob(args.recovery)?
        .with_runs(args.runs)?;
    let result = with_threads(args.threads, || Ok(spreading_ability(&graph, &config)?))?;

    let mut out = output::sink(&args.out)?;
    match args.format {
        Format::Csv => {
            writeln!(
                out,
                "# sir beta={} recovery={} runs={} seed={}",
                fmt_f64(config.beta),
                fmt_f64(config.recovery_prob),
                config.runs,
                config.master_seed
            )?;
            writeln!(out, "node_label,beta,ability,runs")?;
            for (i, &a) in result.ability.iter().enumerate() {
                writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(graph.label(i)),
                    fmt_f64(config.beta),
                    fmt_f64(a),
                    result.runs
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<SirRow> = result
                .ability
                .iter()
                .enumerate()
                .map(|(i, &ability)| SirRow {
                    node_label: graph.label(i).to_string(),
                    beta: config.beta,
                    ability,
                    runs: result.runs,
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    Ok(())
}
