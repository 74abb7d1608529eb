#![no_main]

use libfuzzer_sys::fuzz_target;
use spreadrank::graph::{load_edge_list, LoadOptions};

fuzz_target!(|data: &[u8]| {
    let collapsing = LoadOptions::default();
    if let Ok((graph, report)) = load_edge_list(std::io::Cursor::new(data), &collapsing) {
        // Anything the loader accepts must satisfy the graph invariants.
        let degree_sum: usize = (0..graph.node_count())
            .map(|v| graph.neighbors(v).len())
            .sum();
        assert_eq!(degree_sum, 2 * graph.edge_count());
        assert_eq!(report.edges_kept, graph.edge_count());
        for v in 0..graph.node_count() {
            let adj = graph.neighbors(v);
            assert!(adj.windows(2).all(|w| w[0] < w[1]));
            assert!(!adj.contains(&v));
        }
    }

    let strict = LoadOptions { collapse_duplicates: false, ..LoadOptions::default() };
    let _ = load_edge_list(std::io::Cursor::new(data), &strict);
});
