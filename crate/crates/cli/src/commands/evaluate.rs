use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use spreadrank::centrality::{Method, NodeScores};
use spreadrank::graph::{Graph, NetworkStats};
use spreadrank::metrics::{kendall_tau_b, monotonicity, MetricsError};
use spreadrank::sir::{spreading_ability, SirConfig};

use super::{compute_scores, parse_methods, with_threads, ScoreSettings, GRAVITY_RADIUS};
use crate::output::{csv_field, fmt_f64, fmt_opt_f64, write_file};
use crate::{dataset, EvaluateArgs};

#[derive(Serialize)]
struct ConfigEcho {
    dataset: String,
    methods: Vec<&'static str>,
    dks_radius: usize,
    gravity_radius: usize,
    lgm_radius_override: Option<usize>,
    lgm_rounding: String,
    dnc_alpha: f64,
    npic_alpha: f64,
    npic_beta: f64,
    betas: Vec<f64>,
    runs: u32,
    recovery_prob: f64,
    master_seed: u64,
}

#[derive(Serialize)]
struct StatsEcho {
    n: usize,
    m: usize,
    avg_degree: f64,
    second_order_avg_degree: f64,
    avg_distance: f64,
    assortativity: Option<f64>,
    beta_th: Option<f64>,
}

#[derive(Serialize)]
struct MethodEcho {
    method: &'static str,
    params: String,
}

#[derive(Serialize)]
struct MonotonicityRow {
    method: &'static str,
    monotonicity: f64,
}

#[derive(Serialize)]
struct TauRow {
    method: &'static str,
    beta: f64,
    tau: Option<f64>,
    runs: u32,
}

#[derive(Serialize)]
struct Report {
    config: ConfigEcho,
    stats: StatsEcho,
    method_params: Vec<MethodEcho>,
    monotonicity: Vec<MonotonicityRow>,
    tau: Vec<TauRow>,
}

pub fn run(args: EvaluateArgs) -> Result<()> {
    let methods = parse_methods(&args.methods.methods)?;
    let (graph, resolved) = dataset::load(&args.dataset)?;
    let settings = ScoreSettings::from_args(&args.methods, resolved.manifest_radius);
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating output directory {}", args.out.display()))?;

    with_threads(args.threads, || {
        evaluate(&args, &graph, resolved.path.display().to_string(), methods, settings)
    })
}

fn resolve_betas(args: &EvaluateArgs, stats: &NetworkStats) -> Result<Vec<f64>> {
    let betas = if let Some(list) = &args.beta {
        list.clone()
    } else if let Some(sweep) = &args.beta_sweep {
        parse_sweep(sweep)?
    } else {
        // 13 points bracketing the epidemic threshold, 0.5·β_th to 2·β_th.
        let Some(beta_th) = stats.beta_th else {
            bail!(
                "the epidemic threshold is undefined for this graph; \
                 pass --beta or --beta-sweep explicitly"
            );
        };
        (0..13).map(|i| beta_th * (0.5 + 1.5 * i as f64 / 12.0)).collect()
    };
    if betas.is_empty() {
        bail!("no beta values selected");
    }
    for &b in &betas {
        if !(0.0..=1.0).contains(&b) {
            bail!("beta {b} is outside [0, 1]");
        }
    }
    Ok(betas)
}

fn parse_sweep(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        bail!("--beta-sweep expects start:stop:step, got '{spec}'");
    }
    let start: f64 = parts[0].parse().context("sweep start")?;
    let stop: f64 = parts[1].parse().context("sweep stop")?;
    let step: f64 = parts[2].parse().context("sweep step")?;
    if step <= 0.0 {
        bail!("sweep step must be positive");
    }
    if stop < start {
        bail!("sweep stop must not be below start");
    }
    let mut betas = Vec::new();
    let mut i = 0u32;
    loop {
        let b = start + step * i as f64;
        if b > stop + 1e-12 {
            break;
        }
        betas.push(b);
        i += 1;
    }
    Ok(betas)
}

fn evaluate(
    args: &EvaluateArgs,
    graph: &Graph,
    dataset_path: String,
    methods: Vec<Method>,
    settings: ScoreSettings,
) -> Result<()> {
    let mut timings: Vec<(String, String, f64)> = Vec::new();

    let t0 = Instant::now();
    let stats = graph.network_stats()?;
    timings.push(("stats".into(), "all_pairs_bfs".into(), t0.elapsed().as_secs_f64()));

    let betas = resolve_betas(args, &stats)?;

    // Score every method, timing each one.
    let mut scored: Vec<NodeScores> = Vec::with_capacity(methods.len());
    for &m in &methods {
        let t = Instant::now();
        let ns = compute_scores(graph, m, &settings, Some(stats.avg_distance))?;
        timings.push(("score".into(), m.name().into(), t.elapsed().as_secs_f64()));
        scored.push(ns);
    }

    let mono: Vec<MonotonicityRow> = scored
        .iter()
        .map(|ns| {
            Ok(MonotonicityRow {
                method: ns.method.name(),
                monotonicity: monotonicity(&ns.scores)?,
            })
        })
        .collect::<Result<_>>()?;

    // SIR ground truth per beta, then tau-b of every method against it.
    let mut tau_rows: Vec<TauRow> = Vec::new();
    let mut abilities: Vec<Vec<f64>> = Vec::with_capacity(betas.len());
    for &beta in &betas {
        let config = SirConfig::new(beta, args.seed)?
            .with_recovery_prob(args.recovery)?
            .with_runs(args.runs)?;
        let t = Instant::now();
        let sa = spreading_ability(graph, &config)?;
        timings.push(("sir".into(), format!("beta={}", fmt_f64(beta)), t.elapsed().as_secs_f64()));
        abilities.push(sa.ability);
    }
    for ns in &scored {
        for (bi, &beta) in betas.iter().enumerate() {
            let tau = match kendall_tau_b(&ns.scores, &abilities[bi]) {
                Ok(r) => Some(r.tau),
                Err(MetricsError::AllTied) => None,
                Err(e) => return Err(e.into()),
            };
            tau_rows.push(TauRow { method: ns.method.name(), beta, tau, runs: args.runs });
        }
    }

    let report = Report {
        config: ConfigEcho {
            dataset: dataset_path,
            methods: methods.iter().map(|m| m.name()).collect(),
            dks_radius: settings.dks_radius,
            gravity_radius: GRAVITY_RADIUS,
            lgm_radius_override: settings.lgm_radius,
            lgm_rounding: format!("{:?}", settings.lgm_rounding),
            dnc_alpha: settings.dnc_alpha,
            npic_alpha: settings.npic_alpha,
            npic_beta: settings.npic_beta,
            betas: betas.clone(),
            runs: args.runs,
            recovery_prob: args.recovery,
            master_seed: args.seed,
        },
        stats: StatsEcho {
            n: graph.node_count(),
            m: graph.edge_count(),
            avg_degree: stats.avg_degree,
            second_order_avg_degree: stats.second_order_avg_degree,
            avg_distance: stats.avg_distance,
            assortativity: stats.assortativity,
            beta_th: stats.beta_th,
        },
        method_params: scored
            .iter()
            .map(|ns| MethodEcho { method: ns.method.name(), params: ns.params.to_string() })
            .collect(),
        monotonicity: mono,
        tau: tau_rows,
    };

    write_file(
        &args.out.join("report.json"),
        &format!("{}\n", serde_json::to_string_pretty(&report)?),
    )?;

    let config_comment = format!(
        "# dataset={} runs={} seed={} recovery={} dks_radius={}",
        csv_field(&report.config.dataset),
        args.runs,
        args.seed,
        fmt_f64(args.recovery),
        settings.dks_radius
    );

    let mut tau_csv = String::new();
    writeln!(tau_csv, "{config_comment}").unwrap();
    writeln!(tau_csv, "method,beta,tau,runs").unwrap();
    for row in &report.tau {
        writeln!(
            tau_csv,
            "{},{},{},{}",
            row.method,
            fmt_f64(row.beta),
            fmt_opt_f64(row.tau),
            row.runs
        )
        .unwrap();
    }
    write_file(&args.out.join("tau.csv"), &tau_csv)?;

    let mut mono_csv = String::new();
    writeln!(mono_csv, "{config_comment}").unwrap();
    writeln!(mono_csv, "method,monotonicity").unwrap();
    for row in &report.monotonicity {
        writeln!(mono_csv, "{},{}", row.method, fmt_f64(row.monotonicity)).unwrap();
    }
    write_file(&args.out.join("monotonicity.csv"), &mono_csv)?;

    // Per-node scores next to the SIR abilities: everything a scatter plot
    // of any method pair (colored by spreading ability) needs.
    let mut scores_csv = String::new();
    writeln!(scores_csv, "{config_comment}").unwrap();
    let mut header = String::from("node_label");
    for ns in &scored {
        write!(header, ",{}", ns.method).unwrap();
    }
    for &beta in &betas {
        write!(header, ",sir_ability_beta_{}", fmt_f64(beta)).unwrap();
    }
    writeln!(scores_csv, "{header}").unwrap();
    for i in 0..graph.node_count() {
        let mut line = csv_field(graph.label(i));
        for ns in &scored {
            write!(line, ",{}", fmt_f64(ns.scores[i])).unwrap();
        }
        for ability in &abilities {
            write!(line, ",{}", fmt_f64(ability[i])).unwrap();
        }
        writeln!(scores_csv, "{line}").unwrap();
    }
    write_file(&args.out.join("scores.csv"), &scores_csv)?;

    // Wall-clock times vary run to run, so they live in their own file;
    // everything above is byte-identical for a fixed config and seed.
    let mut timings_csv = String::from("kind,label,seconds\n");
    for (kind, label, seconds) in &timings {
        writeln!(timings_csv, "{},{},{}", kind, csv_field(label), fmt_f64(*seconds)).unwrap();
    }
    write_file(&args.out.join("timings.csv"), &timings_csv)?;

    eprintln!(
        "evaluate: wrote report.json, tau.csv, monotonicity.csv, scores.csv, timings.csv to {}",
        args.out.display()
    );
    Ok(())
}
