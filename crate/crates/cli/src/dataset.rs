//! Resolving `--dataset` arguments: direct file paths, or names looked up in
//! the manifest (which also supplies the per-dataset DKS radius).

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use spreadrank::graph::{load_edge_list, Graph, LoadOptions};
use spreadrank::manifest::parse_manifest;

use crate::DatasetArgs;

pub struct ResolvedDataset {
    pub path: PathBuf,
    /// DKS radius from the manifest, when the dataset was named.
    pub manifest_radius: Option<usize>,
}

pub fn resolve(dataset: &str, manifest: &Path) -> Result<ResolvedDataset> {
    let direct = Path::new(dataset);
    if direct.is_file() {
        return Ok(ResolvedDataset { path: direct.to_path_buf(), manifest_radius: None });
    }
    if manifest.is_file() {
        let file = File::open(manifest)
            .with_context(|| format!("opening manifest {}", manifest.display()))?;
        let entries = parse_manifest(BufReader::new(file))
            .with_context(|| format!("parsing manifest {}", manifest.display()))?;
        if let Some(entry) = entries.iter().find(|e| e.name == dataset) {
            let base = manifest.parent().unwrap_or(Path::new("."));
            let path = if entry.path.is_absolute() {
                entry.path.clone()
            } else {
                base.join(&entry.path)
            };
            if !path.is_file() {
                bail!(
                    "dataset '{}' is listed in {} but its file {} does not exist \
                     (place the downloaded edge list there)",
                    dataset,
                    manifest.display(),
                    path.display()
                );
            }
            return Ok(ResolvedDataset { path, manifest_radius: Some(entry.radius) });
        }
        bail!(
            "dataset '{}' is neither an existing file nor a name in {}",
            dataset,
            manifest.display()
        );
    }
    bail!(
        "dataset '{}' is not a file, and no manifest was found at {}",
        dataset,
        manifest.display()
    );
}

/// Loads the dataset and prints the load report to the diagnostics stream.
pub fn load(args: &DatasetArgs) -> Result<(Graph, ResolvedDataset)> {
    let resolved = resolve(&args.dataset, &args.manifest)?;
    let file = File::open(&resolved.path)
        .with_context(|| format!("opening dataset {}", resolved.path.display()))?;
    let options = LoadOptions {
        collapse_duplicates: !args.strict_duplicates,
        ..LoadOptions::default()
    };
    let (graph, report) = load_edge_list(BufReader::new(file), &options)
        .with_context(|| format!("loading {}", resolved.path.display()))?;
    eprintln!(
        "loaded {}: {} nodes, {} edges ({} self-loops dropped, {} duplicates collapsed, {} comment lines)",
        resolved.path.display(),
        graph.node_count(),
        graph.edge_count(),
        report.self_loops_dropped,
        report.duplicates_collapsed,
        report.comment_lines,
    );
    Ok((graph, resolved))
}
