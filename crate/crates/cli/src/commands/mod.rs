pub mod correlate;
pub mod evaluate;
pub mod rank;
pub mod sir;
pub mod stats;
pub mod time;

use anyhow::{anyhow, Result};
use spreadrank::centrality::{
    dc_scores, dks_scores, dnc_scores, gravity_scores, ks_scores, lgm_scores_with_avg_distance,
    lgm_scores_with_radius, npic_scores, LgmRounding, Method, NodeScores,
};
use spreadrank::graph::Graph;

use crate::MethodArgs;

/// The classical Gravity neighborhood level.
pub const GRAVITY_RADIUS: usize = 3;
/// DKS radius when neither the flag nor the manifest supplies one.
pub const DEFAULT_DKS_RADIUS: usize = 3;

/// Fully resolved method tunables for one invocation.
#[derive(Debug, Clone, Copy)]
pub struct ScoreSettings {
    pub dks_radius: usize,
    pub dnc_alpha: f64,
    pub npic_alpha: f64,
    pub npic_beta: f64,
    pub lgm_radius: Option<usize>,
    pub lgm_rounding: LgmRounding,
}

impl ScoreSettings {
    pub fn from_args(args: &MethodArgs, manifest_radius: Option<usize>) -> ScoreSettings {
        ScoreSettings {
            dks_radius: args.radius.or(manifest_radius).unwrap_or(DEFAULT_DKS_RADIUS),
            dnc_alpha: args.dnc_alpha,
            npic_alpha: args.npic_alpha,
            npic_beta: args.npic_beta,
            lgm_radius: args.lgm_radius,
            lgm_rounding: args.lgm_rounding,
        }
    }
}

/// Expands `--methods` (handles `all`, deduplicates, preserves order).
pub fn parse_methods(raw: &[String]) -> Result<Vec<Method>> {
    let mut methods: Vec<Method> = Vec::new();
    for token in raw {
        if token.eq_ignore_ascii_case("all") {
            for m in Method::ALL {
                if !methods.contains(&m) {
                    methods.push(m);
                }
            }
            continue;
        }
        let m: Method = token.parse().map_err(|e: String| anyhow!(e))?;
        if !methods.contains(&m) {
            methods.push(m);
        }
    }
    if methods.is_empty() {
        return Err(anyhow!("no methods selected"));
    }
    Ok(methods)
}

/// Scores one method. `avg_distance` feeds LGM's derived radius; pass the
/// precomputed value to avoid a second all-pairs BFS.
pub fn compute_scores(
    g: &Graph,
    method: Method,
    settings: &ScoreSettings,
    avg_distance: Option<f64>,
) -> Result<NodeScores> {
    let scores = match method {
        Method::Dc => dc_scores(g),
        Method::Ks => ks_scores(g),
        Method::Gravity => gravity_scores(g, GRAVITY_RADIUS)?,
        Method::Lgm => match settings.lgm_radius {
            Some(radius) => lgm_scores_with_radius(g, radius)?,
            None => {
                let avg = match avg_distance {
                    Some(d) => d,
                    None => g.network_stats()?.avg_distance,
                };
                lgm_scores_with_avg_distance(g, avg, settings.lgm_rounding)
            }
        },
        Method::Dnc => dnc_scores(g, settings.dnc_alpha)?,
        Method::Npic => npic_scores(g, settings.npic_alpha, settings.npic_beta)?,
        Method::Dks => dks_scores(g, settings.dks_radius)?,
    };
    Ok(scores)
}

/// Runs `body` on a rayon pool with the requested thread count
/// (0 = library default).
pub fn with_threads<T>(threads: usize, body: impl FnOnce() -> Result<T> + Send) -> Result<T>
where
    T: Send,
{
    if threads == 0 {
        return body();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| anyhow!("building thread pool: {e}"))?;
    pool.install(body)
}
