//! Ranking of influential spreader nodes in undirected networks.
//!
//! The library has five parts:
//!
//! * [`graph`] — edge-list loading, adjacency queries, bounded BFS and
//!   whole-network statistics (average degree, average distance,
//!   assortativity, epidemic threshold).
//! * [`kshell`] — k-shell (coreness) decomposition by bucketed peeling.
//! * [`centrality`] — the seven ranking methods: DC, KS, Gravity, LGM,
//!   DNC, NPIC and DKS.
//! * [`sir`] — a reproducible Monte-Carlo SIR simulator that measures the
//!   ground-truth spreading ability of every node.
//! * [`metrics`] — Kendall's tau-b with tie correction and the
//!   monotonicity (resolution) index.
//!
//! [`generate`] provides seeded synthetic graphs for scaling experiments and
//! [`manifest`] parses the dataset manifest used by the benchmark CLI.

pub mod centrality;
pub mod generate;
pub mod graph;
pub mod kshell;
pub mod manifest;
pub mod metrics;
pub mod sir;

pub use graph::{load_edge_list, Graph, GraphError, LoadError, LoadOptions, LoadReport, NetworkStats};
pub use kshell::{kshell_decomposition, KShellIndex};
