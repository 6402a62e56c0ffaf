//! Graph sources on the command line: `@catalog:NAME`, a file, or `-`.

use std::io::Read;
use std::path::Path;

use locolor_core::catalog::{named, GraphId};
use locolor_core::Graph;

use crate::format::{parse_graph, sniff, Format, FormatError};

#[derive(Debug, thiserror::Error)]
pub enum SourceError {
    #[error("unknown catalog graph {0:?}")]
    UnknownGraph(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Format { origin: String, source: FormatError },
}

pub fn catalog_graph(name: &str) -> Result<(GraphId, Graph), SourceError> {
    let id: GraphId = name.parse().map_err(|_| SourceError::UnknownGraph(name.to_string()))?;
    let g = named(id).map_err(|_| SourceError::UnknownGraph(name.to_string()))?;
    Ok((id, g.graph))
}

/// Files ending in `.g6` are graph6 and `.txt`/`.adj`/`.edges` adjacency
/// text; anything else is sniffed.
pub fn resolve(source: &str) -> Result<Graph, SourceError> {
    if let Some(name) = source.strip_prefix("@catalog:") {
        return catalog_graph(name).map(|(_, g)| g);
    }
    if source == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| SourceError::Io {
            path: "<stdin>".into(),
            source: e,
        })?;
        return parse_graph(&buf, Format::Graph6).map_err(|e| SourceError::Format {
            origin: "<stdin>".into(),
            source: e,
        });
    }
    let path = Path::new(source);
    let bytes = std::fs::read(path).map_err(|e| SourceError::Io {
        path: source.into(),
        source: e,
    })?;
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::Graph6,
        Some("txt" | "adj" | "edges") => Format::Adjacency,
        _ => sniff(&bytes),
    };
    parse_graph(&bytes, format).map_err(|e| SourceError::Format {
        origin: source.into(),
        source: e,
    })
}
