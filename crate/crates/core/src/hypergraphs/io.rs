//! Hypergraph file format: `{"n": <int>, "edges": [[v, ...], ...]}` with
//! 0-based vertices; edge order is array order.

use serde::Deserialize;

use super::{HyperError, Hypergraph};
use crate::error::{ParseError, MAX_FILE_VERTICES};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    n: u64,
    edges: Vec<Vec<u64>>,
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let raw: HypergraphFile = serde_json::from_str(text)?;
    if raw.n > MAX_FILE_VERTICES {
        return Err(ParseError::field(
            "n",
            format!(
                "{} vertices exceeds the limit of {MAX_FILE_VERTICES}",
                raw.n
            ),
        ));
    }
    let n = raw.n as usize;
    let edges = raw
        .edges
        .iter()
        .map(|e| e.iter().map(|&v| v.min(n as u64) as usize).collect())
        .collect();
    Hypergraph::new(n, edges).map_err(|e| match e {
        HyperError::EdgeTooSmall { index, size } => ParseError::field(
            format!("edges[{index}]"),
            format!("{size} vertices; hyperedges need at least 2"),
        ),
        HyperError::RepeatedVertex { index, vertex } => ParseError::field(
            format!("edges[{index}]"),
            format!("vertex {vertex} repeated"),
        ),
        HyperError::VertexOutOfRange { index, n, .. } => {
            ParseError::field(format!("edges[{index}]"), format!("vertex outside 0..{n}"))
        }
        other => ParseError::field("edges", other.to_string()),
    })
}

pub fn hypergraph_to_json(h: &Hypergraph) -> serde_json::Value {
    serde_json::json!({ "n": h.vertex_count(), "edges": h.edges() })
}
