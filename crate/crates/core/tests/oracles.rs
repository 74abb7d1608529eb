//! Independent-oracle checks: slow reference implementations that the fast
//! paths must reproduce exactly (or to stated precision).

use std::collections::HashMap;

use spreadrank::centrality::{dks_scores, dnc_scores, gravity_scores, npic_scores};
use spreadrank::generate::gnp;
use spreadrank::graph::Graph;
use spreadrank::kshell::kshell_decomposition;

/// All-pairs shortest paths by Floyd–Warshall, O(n³).
fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    const INF: usize = usize::MAX / 4;
    let mut dist = vec![vec![INF; n]; n];
    for v in 0..n {
        dist[v][v] = 0;
        for &u in g.neighbors(v) {
            dist[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

#[test]
fn bounded_bfs_matches_floyd_warshall() {
    for trial in 0..20 {
        let n = 10 + (trial % 5) * 10;
        let g = gnp(n, 0.1, 500 + trial as u64);
        let fw = floyd_warshall(&g);
        for src in 0..n {
            for radius in [Some(1), Some(2), Some(3), None] {
                let bfs = g.bfs_distances_bounded(src, radius).unwrap();
                let cap = radius.unwrap_or(usize::MAX);
                let expected: HashMap<usize, usize> = (0..n)
                    .filter(|&j| j != src && fw[src][j] <= cap && fw[src][j] < usize::MAX / 4)
                    .map(|j| (j, fw[src][j]))
                    .collect();
                assert_eq!(bfs, expected, "trial {trial} src {src} radius {radius:?}");
            }
        }
    }
}

#[test]
fn bounded_bfs_is_unbounded_filtered() {
    let g = gnp(60, 0.07, 12);
    for src in 0..g.node_count() {
        let full = g.bfs_distances_bounded(src, None).unwrap();
        for radius in 1..=4 {
            let bounded = g.bfs_distances_bounded(src, Some(radius)).unwrap();
            let filtered: HashMap<usize, usize> =
                full.iter().filter(|&(_, &d)| d <= radius).map(|(&j, &d)| (j, d)).collect();
            assert_eq!(bounded, filtered);
        }
    }
}

/// DKS by the definition: unbounded BFS per node, filter to radius, sum.
fn dks_naive(g: &Graph, radius: usize) -> Vec<f64> {
    let ks = kshell_decomposition(g);
    let si: Vec<f64> = (0..g.node_count())
        .map(|i| (ks.get(i) + g.degree(i).unwrap()) as f64)
        .collect();
    (0..g.node_count())
        .map(|i| {
            let dist = g.bfs_distances_bounded(i, None).unwrap();
            let ni: f64 = dist
                .iter()
                .filter(|&(_, &d)| d <= radius)
                .map(|(&j, &d)| si[j] / d as f64)
                .sum();
            si[i] * ni
        })
        .collect()
}

#[test]
fn dks_matches_naive_double_loop() {
    for trial in 0..15 {
        let n = 20 + (trial % 5) * 20;
        let g = gnp(n, 0.08, 900 + trial as u64);
        for radius in [1, 2, 3] {
            let fast = dks_scores(&g, radius).unwrap().scores;
            let slow = dks_naive(&g, radius);
            for v in 0..n {
                let scale = fast[v].abs().max(slow[v].abs()).max(1.0);
                assert!(
                    (fast[v] - slow[v]).abs() <= 1e-9 * scale,
                    "trial {trial} radius {radius} node {v}: {} vs {}",
                    fast[v],
                    slow[v]
                );
            }
        }
    }
}

#[test]
fn methods_are_permutation_equivariant() {
    let g = gnp(40, 0.12, 31);
    let n = g.node_count();
    let perm: Vec<usize> = (0..n).map(|v| (v * 23 + 11) % n).collect(); // 23 coprime with 40
    let mut edges = Vec::new();
    for v in 0..n {
        for &u in g.neighbors(v) {
            if v < u {
                edges.push((perm[v], perm[u]));
            }
        }
    }
    let h = Graph::from_edges(n, &edges).unwrap();

    let check = |name: &str, sg: Vec<f64>, sh: Vec<f64>| {
        for v in 0..n {
            assert!(
                (sg[v] - sh[perm[v]]).abs() < 1e-9 * sg[v].abs().max(1.0),
                "{name}: node {v}"
            );
        }
    };
    check("dks", dks_scores(&g, 2).unwrap().scores, dks_scores(&h, 2).unwrap().scores);
    check("gravity", gravity_scores(&g, 3).unwrap().scores, gravity_scores(&h, 3).unwrap().scores);
    check("dnc", dnc_scores(&g, 1.0).unwrap().scores, dnc_scores(&h, 1.0).unwrap().scores);
    check("npic", npic_scores(&g, 1.0, 1.0).unwrap().scores, npic_scores(&h, 1.0, 1.0).unwrap().scores);

    let sg = g.network_stats().unwrap();
    let sh = h.network_stats().unwrap();
    assert!((sg.avg_distance - sh.avg_distance).abs() < 1e-12);
}
