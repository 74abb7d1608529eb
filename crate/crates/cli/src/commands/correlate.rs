use std::io::Write;

use anyhow::{anyhow, Result};
use serde::Serialize;
use spreadrank::centrality::Method;
use spreadrank::sir::{spreading_ability, SirConfig};

use super::{compute_scores, with_threads, ScoreSettings};
use crate::output::{self, csv_field, fmt_f64, Format};
use crate::{dataset, CorrelateArgs};

#[derive(Serialize)]
struct ScatterRow {
    node_label: String,
    score_x: f64,
    score_y: f64,
    sir_ability: f64,
}

pub fn run(args: CorrelateArgs) -> Result<()> {
    let method_x: Method = args.method_x.parse().map_err(|e: String| anyhow!(e))?;
    let method_y: Method = args.method_y.parse().map_err(|e: String| anyhow!(e))?;
    let (graph, resolved) = dataset::load(&args.dataset)?;
    let settings = ScoreSettings::from_args(&args.methods, resolved.manifest_radius);
    let config = SirConfig::new(args.beta, args.seed)?
        .with_recovery_prob(args.recovery)?
        .with_runs(args.runs)?;

    let (x, y, ability) = with_threads(args.threads, || {
        let needs_avg = (method_x == Method::Lgm || method_y == Method::Lgm)
            && settings.lgm_radius.is_none();
        let avg_distance =
            if needs_avg { Some(graph.network_stats()?.avg_distance) } else { None };
        let x = compute_scores(&graph, method_x, &settings, avg_distance)?;
        let y = compute_scores(&graph, method_y, &settings, avg_distance)?;
        let ability = spreading_ability(&graph, &config)?;
        Ok((x, y, ability))
    })?;

    let mut out = output::sink(&args.out)?;
    match args.format {
        Format::Csv => {
            writeln!(
                out,
                "# x={} ({}) y={} ({}) beta={} runs={} seed={}",
                x.method,
                x.params,
                y.method,
                y.params,
                fmt_f64(args.beta),
                args.runs,
                args.seed
            )?;
            writeln!(out, "node_label,score_x,score_y,sir_ability")?;
            for i in 0..graph.node_count() {
                writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(graph.label(i)),
                    fmt_f64(x.scores[i]),
                    fmt_f64(y.scores[i]),
                    fmt_f64(ability.ability[i])
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<ScatterRow> = (0..graph.node_count())
                .map(|i| ScatterRow {
                    node_label: graph.label(i).to_string(),
                    score_x: x.scores[i],
                    score_y: y.scores[i],
                    sir_ability: ability.ability[i],
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    Ok(())
}
