//! Graph file format: `{"n": <int>, "edges": [[u, v], ...]}` with 0-based
//! vertices. Edge order is array order.

use serde::{Deserialize, Serialize};

use super::{GraphError, Multigraph};
use crate::error::{ParseError, MAX_FILE_VERTICES};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: u64,
    edges: Vec<[u64; 2]>,
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let raw: GraphFile = serde_json::from_str(text)?;
    if raw.n > MAX_FILE_VERTICES {
        return Err(ParseError::field(
            "n",
            format!(
                "{} vertices exceeds the limit of {MAX_FILE_VERTICES}",
                raw.n
            ),
        ));
    }
    let edges = raw
        .edges
        .iter()
        .map(|&[u, v]| {
            (
                u.min(u64::from(u32::MAX)) as usize,
                v.min(u64::from(u32::MAX)) as usize,
            )
        })
        .collect();
    Multigraph::new(raw.n as usize, edges).map_err(|e| match e {
        GraphError::Loop { index, u, .. } => {
            ParseError::field(format!("edges[{index}]"), format!("loop at vertex {u}"))
        }
        GraphError::VertexOutOfRange { index, n, .. } => ParseError::field(
            format!("edges[{index}]"),
            format!("endpoint outside 0..{n}"),
        ),
        other => ParseError::field("edges", other.to_string()),
    })
}

pub fn graph_to_json(g: &Multigraph) -> serde_json::Value {
    serde_json::json!({
        "n": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k3() {
        let g = parse_graph(r#"{"n": 3, "edges": [[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!(g, Multigraph::complete(3));
        assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g);
    }

    #[test]
    fn diagnostics() {
        let err = parse_graph("{\"n\": 3,\n \"edges\": [[0,1],]}").unwrap_err();
        assert!(matches!(err, ParseError::Json { line: 2, .. }), "{err}");
        let err = parse_graph(r#"{"n": 2, "edges": [[0,1],[1,1]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "edges[1]: loop at vertex 1");
        let err = parse_graph(r#"{"n": 2, "edges": [[0,5]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "edges[0]: endpoint outside 0..2");
        assert!(parse_graph(r#"{"n": -1, "edges": []}"#).is_err());
        assert!(parse_graph(r#"{"n": 1, "edges": [], "extra": 0}"#).is_err());
        assert!(parse_graph(r#"{"n": 99999999999, "edges": []}"#).is_err());
    }
}
