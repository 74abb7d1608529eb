//! K-shell (coreness) decomposition.
//!
//! Shell `s` is the set of nodes removed while iteratively pruning every node
//! of current degree ≤ s; pruning cascades within a shell before the level is
//! incremented. Equivalently, `ks(v)` is the largest `s` such that `v`
//! belongs to the s-core. Isolated nodes get shell 0.

use crate::graph::Graph;

/// Per-node shell numbers produced by [`kshell_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KShellIndex {
    ks: Vec<usize>,
}

impl KShellIndex {
    pub fn get(&self, node: usize) -> usize {
        self.ks[node]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ks
    }

    pub fn max_shell(&self) -> usize {
        self.ks.iter().copied().max().unwrap_or(0)
    }
}

/// Bucketed peeling (degree buckets with lazy degree decrement), O(n + m).
pub fn kshell_decomposition(g: &Graph) -> KShellIndex {
    let n = g.node_count();
    if n == 0 {
        return KShellIndex { ks: Vec::new() };
    }

    let mut degree: Vec<usize> = g.degrees().collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // Counting sort of nodes by degree: `vert` is the peeling order,
    // `pos[v]` the position of v in it, `bin[d]` the start of degree-d nodes.
    let mut bin = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            let p = next[degree[v]];
            vert[p] = v;
            pos[v] = p;
            next[degree[v]] += 1;
        }
    }

    let mut ks = vec![0usize; n];
    for i in 0..n {
        let v = vert[i];
        ks[v] = degree[v];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                // Swap u with the first node of its degree bucket, then
                // shrink the bucket by one.
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    KShellIndex { ks }
}
