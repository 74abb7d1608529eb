use anyhow::Result;
use serde::Serialize;

use crate::output::{self, fmt_f64, fmt_opt_f64, Format};
use crate::{dataset, StatsArgs};

#[derive(Serialize)]
struct StatsJson {
    dataset: String,
    n: usize,
    m: usize,
    avg_degree: f64,
    second_order_avg_degree: f64,
    avg_distance: f64,
    assortativity: Option<f64>,
    beta_th: Option<f64>,
}

pub fn run(args: StatsArgs) -> Result<()> {
    let (graph, resolved) = dataset::load(&args.dataset)?;
    let stats = graph.network_stats()?;
    let json = StatsJson {
        dataset: resolved.path.display().to_string(),
        n: graph.node_count(),
        m: graph.edge_count(),
        avg_degree: stats.avg_degree,
        second_order_avg_degree: stats.second_order_avg_degree,
        avg_distance: stats.avg_distance,
        assortativity: stats.assortativity,
        beta_th: stats.beta_th,
    };
    let mut out = output::sink(&args.out)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?,
        Format::Csv => {
            writeln!(out, "field,value")?;
            writeln!(out, "dataset,{}", output::csv_field(&json.dataset))?;
            writeln!(out, "n,{}", json.n)?;
            writeln!(out, "m,{}", json.m)?;
            writeln!(out, "avg_degree,{}", fmt_f64(json.avg_degree))?;
            writeln!(out, "second_order_avg_degree,{}", fmt_f64(json.second_order_avg_degree))?;
            writeln!(out, "avg_distance,{}", fmt_f64(json.avg_distance))?;
            writeln!(out, "assortativity,{}", fmt_opt_f64(json.assortativity))?;
            writeln!(out, "beta_th,{}", fmt_opt_f64(json.beta_th))?;
        }
    }
    Ok(())
}
