//! Undirected simple graphs with dense node ids, plus the edge-list loader
//! and whole-network statistics.

use std::collections::HashMap;
use std::io::BufRead;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("node id {id} out of range, graph has {node_count} nodes")]
    NodeOutOfRange { id: usize, node_count: usize },
    #[error("radius must be at least 1")]
    RadiusTooSmall,
    #[error("network statistics require at least 2 nodes and 1 edge")]
    GraphTooSmall,
    #[error("edge ({a}, {b}) is invalid: {reason}")]
    InvalidEdge { a: usize, b: usize, reason: &'static str },
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: expected two whitespace-separated node labels, found {found} token(s)")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: duplicate edge {a} {b} and duplicate collapsing is disabled")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("input contains no edges")]
    EmptyInput,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Options for [`load_edge_list`].
#[derive(Debug, Clone)]
pub struct LoadOptions {
    /// Lines starting with any of these prefixes are skipped.
    pub comment_prefixes: Vec<String>,
    /// Collapse repeated edges instead of rejecting the input.
    pub collapse_duplicates: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            comment_prefixes: vec!["#".to_string(), "%".to_string()],
            collapse_duplicates: true,
        }
    }
}

/// What the loader did with the input: kept edges and dropped lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub lines_read: usize,
    pub comment_lines: usize,
    pub blank_lines: usize,
    pub edges_kept: usize,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// Immutable undirected simple graph.
///
/// Nodes carry dense ids `0..n`; the original labels from the input file are
/// kept for reporting. Adjacency lists are sorted and contain no self-loops
/// or duplicates.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
    label_ids: HashMap<String, usize>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph over `node_count` nodes labeled by their index.
    ///
    /// Rejects self-loops, duplicate edges and out-of-range endpoints; use
    /// [`load_edge_list`] for inputs that need cleaning up.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(a, b) in edges {
            if a >= node_count {
                return Err(GraphError::NodeOutOfRange { id: a, node_count });
            }
            if b >= node_count {
                return Err(GraphError::NodeOutOfRange { id: b, node_count });
            }
            if a == b {
                return Err(GraphError::InvalidEdge { a, b, reason: "self-loop" });
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(GraphError::InvalidEdge { a: dup, b: dup, reason: "duplicate edge" });
            }
        }
        let labels: Vec<String> = (0..node_count).map(|i| i.to_string()).collect();
        let label_ids = labels.iter().cloned().zip(0..node_count).collect();
        Ok(Graph { adjacency, labels, label_ids, edge_count: edges.len() })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of links of node `id`.
    pub fn degree(&self, id: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(id)
            .map(Vec::len)
            .ok_or(GraphError::NodeOutOfRange { id, node_count: self.node_count() })
    }

    /// Sorted neighbor list of node `id`.
    ///
    /// Panics if `id` is out of range; use [`Graph::degree`] to validate ids
    /// coming from outside the library.
    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn node_by_label(&self, label: &str) -> Option<usize> {
        self.label_ids.get(label).copied()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// Hop distances from `src` to every node within `radius` hops
    /// (`None` = unbounded). The source itself is not included; unreachable
    /// nodes are absent.
    pub fn bfs_distances_bounded(
        &self,
        src: usize,
        radius: Option<usize>,
    ) -> Result<HashMap<usize, usize>, GraphError> {
        if src >= self.node_count() {
            return Err(GraphError::NodeOutOfRange { id: src, node_count: self.node_count() });
        }
        if radius == Some(0) {
            return Err(GraphError::RadiusTooSmall);
        }
        let cap = radius.unwrap_or(usize::MAX);
        let mut scratch = BfsScratch::new(self.node_count());
        let mut out = HashMap::new();
        scratch.run(self, src, cap, |node, dist| {
            out.insert(node, dist);
        });
        Ok(out)
    }

    /// Whole-network statistics: `⟨k⟩`, `⟨k²⟩`, mean hop distance over
    /// mutually reachable pairs, degree assortativity, and the epidemic
    /// threshold `β_th = ⟨k⟩ / (⟨k²⟩ − ⟨k⟩)`.
    ///
    /// `beta_th` is `None` when `⟨k²⟩ ≤ ⟨k⟩`; `assortativity` is `None` on
    /// regular graphs where the degree variance vanishes.
    pub fn network_stats(&self) -> Result<NetworkStats, GraphError> {
        let n = self.node_count();
        if n < 2 || self.edge_count == 0 {
            return Err(GraphError::GraphTooSmall);
        }

        let mut deg_sum: u128 = 0;
        let mut deg_sq_sum: u128 = 0;
        for d in self.degrees() {
            deg_sum += d as u128;
            deg_sq_sum += (d * d) as u128;
        }
        let avg_degree = deg_sum as f64 / n as f64;
        let second_order = deg_sq_sum as f64 / n as f64;
        let beta_th = if second_order > avg_degree {
            Some(avg_degree / (second_order - avg_degree))
        } else {
            None
        };

        // Mean hop distance over ordered reachable pairs, exact BFS from
        // every source. Unreachable pairs are skipped.
        let (dist_total, pair_count) = (0..n)
            .into_par_iter()
            .map_init(
                || BfsScratch::new(n),
                |scratch, src| {
                    let mut total: u64 = 0;
                    let mut pairs: u64 = 0;
                    scratch.run(self, src, usize::MAX, |_, dist| {
                        total += dist as u64;
                        pairs += 1;
                    });
                    (total, pairs)
                },
            )
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        let avg_distance = dist_total as f64 / pair_count as f64;

        Ok(NetworkStats {
            avg_degree,
            second_order_avg_degree: second_order,
            avg_distance,
            assortativity: self.assortativity(),
            beta_th,
        })
    }

    /// Pearson correlation of degrees at edge endpoints, taken over both
    /// orientations of every edge. `None` when all degrees are equal.
    fn assortativity(&self) -> Option<f64> {
        // Over the 2m directed stubs: Σ j = Σ k = Σ_v d_v², Σ j² = Σ_v d_v³,
        // Σ jk = Σ_{(u,v)∈E} 2·d_u·d_v. Integer sums keep this exact.
        let mut sum_d2: u128 = 0;
        let mut sum_d3: u128 = 0;
        let mut sum_jk: u128 = 0;
        for list in &self.adjacency {
            let du = list.len() as u128;
            sum_d2 += du * du;
            sum_d3 += du * du * du;
            for &v in list {
                sum_jk += du * self.adjacency[v].len() as u128;
            }
        }
        let stubs = (2 * self.edge_count) as f64;
        if stubs == 0.0 {
            return None;
        }
        let mean = sum_d2 as f64 / stubs;
        let var = sum_d3 as f64 / stubs - mean * mean;
        if var <= 0.0 {
            return None;
        }
        let cov = sum_jk as f64 / stubs - mean * mean;
        Some(cov / var)
    }
}

/// Summary statistics of a loaded network.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkStats {
    pub avg_degree: f64,
    pub second_order_avg_degree: f64,
    pub avg_distance: f64,
    pub assortativity: Option<f64>,
    pub beta_th: Option<f64>,
}

/// Reusable breadth-first search buffers. One instance per worker thread
/// keeps the per-source BFS allocation-free.
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    queue: Vec<usize>,
}

const UNVISITED: u32 = u32::MAX;

impl BfsScratch {
    pub(crate) fn new(node_count: usize) -> BfsScratch {
        BfsScratch { dist: vec![UNVISITED; node_count], queue: Vec::with_capacity(node_count) }
    }

    /// Visits every node within `radius` hops of `src` (excluding `src`),
    /// calling `on_reached(node, dist)` in BFS order.
    pub(crate) fn run<F: FnMut(usize, usize)>(
        &mut self,
        g: &Graph,
        src: usize,
        radius: usize,
        mut on_reached: F,
    ) {
        self.queue.clear();
        self.dist[src] = 0;
        self.queue.push(src);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u];
            if du as usize >= radius {
                break; // BFS order: everything past here is at distance ≥ radius
            }
            for &v in g.neighbors(u) {
                if self.dist[v] == UNVISITED {
                    self.dist[v] = du + 1;
                    self.queue.push(v);
                    on_reached(v, (du + 1) as usize);
                }
            }
        }
        for &v in &self.queue {
            self.dist[v] = UNVISITED;
        }
    }
}

/// Reads a whitespace-separated edge list into a [`Graph`].
///
/// Labels are assigned dense ids in first-appearance order. Self-loops are
/// always dropped (and counted in the report); duplicate edges are collapsed
/// when `options.collapse_duplicates` is set and rejected otherwise.
pub fn load_edge_list<R: BufRead>(
    reader: R,
    options: &LoadOptions,
) -> Result<(Graph, LoadReport), LoadError> {
    let mut report = LoadReport::default();
    let mut labels: Vec<String> = Vec::new();
    let mut label_ids: HashMap<String, usize> = HashMap::new();
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    let intern = |token: &str, labels: &mut Vec<String>, ids: &mut HashMap<String, usize>| {
        if let Some(&id) = ids.get(token) {
            id
        } else {
            let id = labels.len();
            labels.push(token.to_string());
            ids.insert(token.to_string(), id);
            id
        }
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        report.lines_read += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            report.blank_lines += 1;
            continue;
        }
        if options.comment_prefixes.iter().any(|p| !p.is_empty() && trimmed.starts_with(p.as_str())) {
            report.comment_lines += 1;
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(LoadError::MalformedLine { line: lineno, found: tokens.len() });
        }
        let a = intern(tokens[0], &mut labels, &mut label_ids);
        let b = intern(tokens[1], &mut labels, &mut label_ids);
        if a == b {
            report.self_loops_dropped += 1;
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key, ()).is_some() {
            if options.collapse_duplicates {
                report.duplicates_collapsed += 1;
                continue;
            }
            return Err(LoadError::DuplicateEdge {
                line: lineno,
                a: tokens[0].to_string(),
                b: tokens[1].to_string(),
            });
        }
        edges.push(key);
    }

    if edges.is_empty() {
        return Err(LoadError::EmptyInput);
    }
    report.edges_kept = edges.len();

    let mut adjacency = vec![Vec::new(); labels.len()];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let edge_count = edges.len();
    Ok((Graph { adjacency, labels, label_ids, edge_count }, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str) -> (Graph, LoadReport) {
        load_edge_list(Cursor::new(text), &LoadOptions::default()).unwrap()
    }

    /// Star with `leaves` leaf nodes; node 0 is the hub.
    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn triangle_loads() {
        let (g, report) = load("a b\nb c\nc a\n");
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        for i in 0..3 {
            assert_eq!(g.degree(i).unwrap(), 2);
        }
        assert_eq!(report.edges_kept, 3);
        assert_eq!(g.node_by_label("a"), Some(0));
        assert_eq!(g.label(2), "c");
    }

    #[test]
    fn dedup_and_self_loop_rules() {
        let (g, report) = load("a b\na b\na a\n");
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(report.duplicates_collapsed, 1);
        assert_eq!(report.self_loops_dropped, 1);
    }

    #[test]
    fn reversed_duplicate_collapses() {
        let (g, _) = load("a b\nb a\n");
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn duplicate_rejected_when_collapse_disabled() {
        let options = LoadOptions { collapse_duplicates: false, ..Default::default() };
        let err = load_edge_list(Cursor::new("a b\nb a\n"), &options).unwrap_err();
        assert!(matches!(err, LoadError::DuplicateEdge { line: 2, .. }));
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = load_edge_list(Cursor::new("a b\nc\n"), &LoadOptions::default()).unwrap_err();
        match err {
            LoadError::MalformedLine { line, found } => {
                assert_eq!(line, 2);
                assert_eq!(found, 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let (g, report) = load("# header\n% another\n\na b\n");
        assert_eq!(g.edge_count(), 1);
        assert_eq!(report.comment_lines, 2);
        assert_eq!(report.blank_lines, 1);
    }

    #[test]
    fn empty_input_is_an_error() {
        let err = load_edge_list(Cursor::new("# only comments\n"), &LoadOptions::default())
            .unwrap_err();
        assert!(matches!(err, LoadError::EmptyInput));
    }

    #[test]
    fn degree_star() {
        let g = star(4);
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(g.degree(1).unwrap(), 1);
        assert!(matches!(g.degree(9), Err(GraphError::NodeOutOfRange { .. })));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let (g, _) = load("a b\nb c\nc a\nc d\nd e\n");
        let total: usize = g.degrees().sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn bfs_bounded_on_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = g.bfs_distances_bounded(0, Some(2)).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&1], 1);
        assert_eq!(d[&2], 2);
    }

    #[test]
    fn bfs_unbounded_covers_component() {
        // Two components: a path of 3 and an isolated edge.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let d = g.bfs_distances_bounded(0, None).unwrap();
        assert_eq!(d.len(), 2);
        assert!(!d.contains_key(&3));
        let d2 = g.bfs_distances_bounded(3, None).unwrap();
        assert_eq!(d2.len(), 1);
    }

    #[test]
    fn bfs_rejects_zero_radius_and_bad_source() {
        let g = star(2);
        assert!(matches!(g.bfs_distances_bounded(0, Some(0)), Err(GraphError::RadiusTooSmall)));
        assert!(matches!(g.bfs_distances_bounded(7, None), Err(GraphError::NodeOutOfRange { .. })));
    }

    #[test]
    fn star_stats_match_hand_computation() {
        // Degrees {4,1,1,1,1}: ⟨k⟩ = 1.6, ⟨k²⟩ = 4, β_th = 1.6/2.4.
        let stats = star(4).network_stats().unwrap();
        assert!((stats.avg_degree - 1.6).abs() < 1e-12);
        assert!((stats.second_order_avg_degree - 4.0).abs() < 1e-12);
        assert!((stats.beta_th.unwrap() - 1.6 / 2.4).abs() < 1e-9);
        // 8 ordered pairs at distance 1, 12 at distance 2.
        assert!((stats.avg_distance - (8.0 + 24.0) / 20.0).abs() < 1e-12);
    }

    #[test]
    fn regular_graph_beta_th() {
        // β_th = 1/(k−1) on any k-regular graph with k ≥ 2; cycle has k = 2.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let stats = g.network_stats().unwrap();
        assert!((stats.beta_th.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(stats.assortativity, None);
    }

    #[test]
    fn degree_one_regular_has_no_threshold() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let stats = g.network_stats().unwrap();
        assert_eq!(stats.beta_th, None);
    }

    #[test]
    fn stats_reject_tiny_graphs() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert!(matches!(g.network_stats(), Err(GraphError::GraphTooSmall)));
    }

    #[test]
    fn avg_distance_skips_unreachable_pairs() {
        // Two disjoint edges: only within-pair distances count.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let stats = g.network_stats().unwrap();
        assert!((stats.avg_distance - 1.0).abs() < 1e-12);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 5)]).is_err());
    }
}
