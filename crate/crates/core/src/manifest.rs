//! Dataset manifest: line-oriented `name path radius` records mapping a
//! dataset name to its edge-list file and its DKS radius.

use std::io::BufRead;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("line {line}: expected 'name path radius', found {found} token(s)")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: radius '{value}' is not a positive integer")]
    BadRadius { line: usize, value: String },
    #[error("line {line}: duplicate dataset name '{name}'")]
    DuplicateName { line: usize, name: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub path: PathBuf,
    pub radius: usize,
}

/// Parses a manifest. Blank lines and lines starting with `#` are skipped.
pub fn parse_manifest<R: BufRead>(reader: R) -> Result<Vec<ManifestEntry>, ManifestError> {
    let mut entries: Vec<ManifestEntry> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ManifestError::MalformedLine { line: lineno, found: tokens.len() });
        }
        let radius: usize = tokens[2]
            .parse()
            .ok()
            .filter(|&r| r >= 1)
            .ok_or_else(|| ManifestError::BadRadius { line: lineno, value: tokens[2].to_string() })?;
        if entries.iter().any(|e| e.name == tokens[0]) {
            return Err(ManifestError::DuplicateName { line: lineno, name: tokens[0].to_string() });
        }
        entries.push(ManifestEntry {
            name: tokens[0].to_string(),
            path: PathBuf::from(tokens[1]),
            radius,
        });
    }
    Ok(entries)
}
