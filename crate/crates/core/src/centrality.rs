//! The seven node-ranking methods: degree (DC), k-shell (KS), Gravity, the
//! local gravity model (LGM), degree-and-neighborhood centrality (DNC),
//! neighborhood-and-path-information centrality (NPIC), and DKS.
//!
//! All scores are pure functions of the graph and the method parameters;
//! the per-node BFS-and-sum loops run in parallel across nodes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::kshell::kshell_decomposition;

#[derive(Debug, Error, PartialEq)]
pub enum CentralityError {
    #[error("radius must be at least 1, got {0}")]
    RadiusTooSmall(usize),
    #[error("dnc alpha must be positive, got {0}")]
    InvalidDncAlpha(f64),
    #[error("npic alpha and beta must lie in [0.1, 1], got alpha={alpha}, beta={beta}")]
    InvalidNpicParams { alpha: f64, beta: f64 },
}

/// The ranking methods compared by the benchmark harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Dc,
    Ks,
    Gravity,
    Lgm,
    Dnc,
    Npic,
    Dks,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Dc,
        Method::Ks,
        Method::Gravity,
        Method::Lgm,
        Method::Dnc,
        Method::Npic,
        Method::Dks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Dc => "DC",
            Method::Ks => "KS",
            Method::Gravity => "GRAVITY",
            Method::Lgm => "LGM",
            Method::Dnc => "DNC",
            Method::Npic => "NPIC",
            Method::Dks => "DKS",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "DC" => Ok(Method::Dc),
            "KS" => Ok(Method::Ks),
            "GRAVITY" => Ok(Method::Gravity),
            "LGM" => Ok(Method::Lgm),
            "DNC" => Ok(Method::Dnc),
            "NPIC" => Ok(Method::Npic),
            "DKS" => Ok(Method::Dks),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

/// Echo of the tunables a scoring run actually used.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ParamsUsed {
    pub radius: Option<usize>,
    pub dnc_alpha: Option<f64>,
    pub npic_alpha: Option<f64>,
    pub npic_beta: Option<f64>,
    /// Average distance behind a derived LGM radius.
    pub avg_distance: Option<f64>,
}

impl fmt::Display for ParamsUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = self.radius {
            parts.push(format!("radius={r}"));
        }
        if let Some(a) = self.dnc_alpha {
            parts.push(format!("dnc_alpha={a}"));
        }
        if let Some(a) = self.npic_alpha {
            parts.push(format!("npic_alpha={a}"));
        }
        if let Some(b) = self.npic_beta {
            parts.push(format!("npic_beta={b}"));
        }
        if let Some(d) = self.avg_distance {
            parts.push(format!("avg_distance={d}"));
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Per-node scores labeled with the producing method and its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeScores {
    pub method: Method,
    pub params: ParamsUsed,
    pub scores: Vec<f64>,
}

/// How a half-integer LGM radius is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LgmRounding {
    /// Round half away from zero (the default).
    #[default]
    HalfUp,
    Floor,
    Ceil,
}

impl FromStr for LgmRounding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "half-up" | "halfup" | "round" => Ok(LgmRounding::HalfUp),
            "floor" => Ok(LgmRounding::Floor),
            "ceil" => Ok(LgmRounding::Ceil),
            other => Err(format!("unknown rounding mode '{other}'")),
        }
    }
}

/// Neighborhood level used by LGM: half the average distance, at least 1.
pub fn lgm_radius(avg_distance: f64, rounding: LgmRounding) -> usize {
    let half = avg_distance / 2.0;
    let r = match rounding {
        LgmRounding::HalfUp => half.round(),
        LgmRounding::Floor => half.floor(),
        LgmRounding::Ceil => half.ceil(),
    };
    (r as usize).max(1)
}

/// Degree centrality: `score_i = k_i`.
pub fn dc_scores(g: &Graph) -> NodeScores {
    NodeScores {
        method: Method::Dc,
        params: ParamsUsed::default(),
        scores: g.degrees().map(|d| d as f64).collect(),
    }
}

/// K-shell centrality: `score_i = ks_i`.
pub fn ks_scores(g: &Graph) -> NodeScores {
    let ks = kshell_decomposition(g);
    NodeScores {
        method: Method::Ks,
        params: ParamsUsed::default(),
        scores: ks.as_slice().iter().map(|&s| s as f64).collect(),
    }
}

/// Shared kernel for Gravity and LGM:
/// `Σ_{j : 1 ≤ d_ij ≤ radius} ks_i·ks_j / d_ij²`.
fn gravity_kernel(g: &Graph, radius: usize) -> Vec<f64> {
    let ks = kshell_decomposition(g);
    let ks = ks.as_slice();
    let n = g.node_count();
    (0..n)
        .into_par_iter()
        .map_init(
            || crate::graph::BfsScratch::new(n),
            |scratch, i| {
                let mut sum = 0.0;
                scratch.run(g, i, radius, |j, d| {
                    sum += ks[j] as f64 / (d * d) as f64;
                });
                sum * ks[i] as f64
            },
        )
        .collect()
}

/// Gravity centrality over neighbors within `radius` hops (classically 3).
pub fn gravity_scores(g: &Graph, radius: usize) -> Result<NodeScores, CentralityError> {
    if radius < 1 {
        return Err(CentralityError::RadiusTooSmall(radius));
    }
    Ok(NodeScores {
        method: Method::Gravity,
        params: ParamsUsed { radius: Some(radius), ..Default::default() },
        scores: gravity_kernel(g, radius),
    })
}

/// LGM with the radius derived from a precomputed average distance.
pub fn lgm_scores_with_avg_distance(
    g: &Graph,
    avg_distance: f64,
    rounding: LgmRounding,
) -> NodeScores {
    let radius = lgm_radius(avg_distance, rounding);
    NodeScores {
        method: Method::Lgm,
        params: ParamsUsed {
            radius: Some(radius),
            avg_distance: Some(avg_distance),
            ..Default::default()
        },
        scores: gravity_kernel(g, radius),
    }
}

/// LGM; computes the network's average distance first (all-pairs BFS).
pub fn lgm_scores(g: &Graph, rounding: LgmRounding) -> Result<NodeScores, GraphError> {
    let stats = g.network_stats()?;
    Ok(lgm_scores_with_avg_distance(g, stats.avg_distance, rounding))
}

/// LGM with an explicitly chosen neighborhood level, bypassing the
/// half-average-distance derivation.
pub fn lgm_scores_with_radius(g: &Graph, radius: usize) -> Result<NodeScores, CentralityError> {
    if radius < 1 {
        return Err(CentralityError::RadiusTooSmall(radius));
    }
    Ok(NodeScores {
        method: Method::Lgm,
        params: ParamsUsed { radius: Some(radius), ..Default::default() },
        scores: gravity_kernel(g, radius),
    })
}

/// Local clustering coefficient of node `i`: the fraction of neighbor pairs
/// that are themselves linked; 0 when `k_i < 2`.
pub fn local_clustering(g: &Graph, i: usize) -> Result<f64, GraphError> {
    let k = g.degree(i)?;
    if k < 2 {
        return Ok(0.0);
    }
    let mut mark = vec![false; g.node_count()];
    for &j in g.neighbors(i) {
        mark[j] = true;
    }
    let mut links = 0usize;
    for &j in g.neighbors(i) {
        links += g.neighbors(j).iter().filter(|&&u| mark[u]).count();
    }
    // Every neighbor-neighbor link was seen from both ends.
    Ok(links as f64 / (k * (k - 1)) as f64)
}

fn all_local_clustering(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    (0..n)
        .into_par_iter()
        .map_init(
            || vec![false; n],
            |mark, i| {
                let k = g.neighbors(i).len();
                if k < 2 {
                    return 0.0;
                }
                for &j in g.neighbors(i) {
                    mark[j] = true;
                }
                let mut links = 0usize;
                for &j in g.neighbors(i) {
                    links += g.neighbors(j).iter().filter(|&&u| mark[u]).count();
                }
                for &j in g.neighbors(i) {
                    mark[j] = false;
                }
                links as f64 / (k * (k - 1)) as f64
            },
        )
        .collect()
}

/// DNC: `k_i + alpha · Σ_{j ∈ N(i)} C_j` with `C_j` the local clustering
/// coefficient of neighbor `j`.
pub fn dnc_scores(g: &Graph, alpha: f64) -> Result<NodeScores, CentralityError> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(CentralityError::InvalidDncAlpha(alpha));
    }
    let clustering = all_local_clustering(g);
    let scores = (0..g.node_count())
        .map(|i| {
            let neighbor_sum: f64 = g.neighbors(i).iter().map(|&j| clustering[j]).sum();
            g.neighbors(i).len() as f64 + alpha * neighbor_sum
        })
        .collect();
    Ok(NodeScores {
        method: Method::Dnc,
        params: ParamsUsed { dnc_alpha: Some(alpha), ..Default::default() },
        scores,
    })
}

/// NPIC: `SI(i) · PI(i)` with `SI(i) = (ks_i·k_i + alpha)/n` and
/// `PI(i) = Σ_{j ≠ i} (ks_j·k_j + beta)/d_ij` over all reachable nodes.
pub fn npic_scores(g: &Graph, alpha: f64, beta: f64) -> Result<NodeScores, CentralityError> {
    if !(0.1..=1.0).contains(&alpha) || !(0.1..=1.0).contains(&beta) {
        return Err(CentralityError::InvalidNpicParams { alpha, beta });
    }
    let ks = kshell_decomposition(g);
    let ks = ks.as_slice();
    let n = g.node_count();
    let degree: Vec<usize> = g.degrees().collect();
    let scores = (0..n)
        .into_par_iter()
        .map_init(
            || crate::graph::BfsScratch::new(n),
            |scratch, i| {
                let si = ((ks[i] * degree[i]) as f64 + alpha) / n as f64;
                let mut pi = 0.0;
                scratch.run(g, i, usize::MAX, |j, d| {
                    pi += ((ks[j] * degree[j]) as f64 + beta) / d as f64;
                });
                si * pi
            },
        )
        .collect();
    Ok(NodeScores {
        method: Method::Npic,
        params: ParamsUsed {
            npic_alpha: Some(alpha),
            npic_beta: Some(beta),
            ..Default::default()
        },
        scores,
    })
}

/// DKS: `(ks_i + k_i) · Σ_{j : 1 ≤ d_ij ≤ radius} (ks_j + k_j)/d_ij`.
pub fn dks_scores(g: &Graph, radius: usize) -> Result<NodeScores, CentralityError> {
    if radius < 1 {
        return Err(CentralityError::RadiusTooSmall(radius));
    }
    let ks = kshell_decomposition(g);
    let ks = ks.as_slice();
    let n = g.node_count();
    let degree: Vec<usize> = g.degrees().collect();
    let self_influence: Vec<f64> = (0..n).map(|i| (ks[i] + degree[i]) as f64).collect();
    let scores = (0..n)
        .into_par_iter()
        .map_init(
            || crate::graph::BfsScratch::new(n),
            |scratch, i| {
                let mut neighborhood = 0.0;
                scratch.run(g, i, radius, |j, d| {
                    neighborhood += self_influence[j] / d as f64;
                });
                self_influence[i] * neighborhood
            },
        )
        .collect();
    Ok(NodeScores {
        method: Method::Dks,
        params: ParamsUsed { radius: Some(radius), ..Default::default() },
        scores,
    })
}
