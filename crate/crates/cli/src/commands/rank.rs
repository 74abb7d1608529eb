use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use spreadrank::centrality::Method;

use super::{compute_scores, parse_methods, with_threads, ScoreSettings};
use crate::output::{self, csv_field, fmt_f64, Format};
use crate::{dataset, RankArgs};

#[derive(Serialize)]
struct RankRow {
    node_label: String,
    method: &'static str,
    score: f64,
}

pub fn run(args: RankArgs) -> Result<()> {
    let methods = parse_methods(&args.methods.methods)?;
    let (graph, resolved) = dataset::load(&args.dataset)?;
    let settings = ScoreSettings::from_args(&args.methods, resolved.manifest_radius);

    // LGM's derived radius needs the average distance; compute the stats
    // once up front if it is on the menu.
    let avg_distance = if methods.contains(&Method::Lgm) && settings.lgm_radius.is_none() {
        Some(graph.network_stats()?.avg_distance)
    } else {
        None
    };

    let scored = with_threads(args.threads, || {
        methods
            .iter()
            .map(|&m| compute_scores(&graph, m, &settings, avg_distance))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut out = output::sink(&args.out)?;
    match args.format {
        Format::Csv => {
            for ns in &scored {
                writeln!(out, "# {} params: {}", ns.method, ns.params)?;
            }
            writeln!(out, "node_label,method,score")?;
            for ns in &scored {
                for (i, &score) in ns.scores.iter().enumerate() {
                    writeln!(
                        out,
                        "{},{},{}",
                        csv_field(graph.label(i)),
                        ns.method,
                        fmt_f64(score)
                    )?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<RankRow> = scored
                .iter()
                .flat_map(|ns| {
                    ns.scores.iter().enumerate().map(|(i, &score)| RankRow {
                        node_label: graph.label(i).to_string(),
                        method: ns.method.name(),
                        score,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    Ok(())
}
