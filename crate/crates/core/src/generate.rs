//! Seeded synthetic graphs for scaling experiments and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Connected random-attachment graph with exactly `n` nodes and `m` edges
/// (`m ≥ n − 1`). Node `i` first attaches to a uniformly random earlier
/// node, then extra edges are sampled uniformly until `m` is reached.
/// Deterministic in `seed`.
pub fn random_attachment(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two nodes");
    let m = m.max(n - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((j, i));
        seen.insert((j, i));
    }
    while edges.len() < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple by construction")
}

/// Erdős–Rényi G(n, p) graph; may be disconnected. Deterministic in `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("gnp edges are simple by construction")
}
