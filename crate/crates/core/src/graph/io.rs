//! JSON edge-list documents:
//!
//! ```json
//! {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]], "labels": ["e11", "e12", "e13"]}
//! ```
//!
//! `labels` is optional. Errors report the line of the offending edge.

use serde::Deserialize;

use super::{EdgeLabel, Graph};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let positions = KeyPositions::scan(text);
    let edge_line = |idx: usize| positions.edge_lines.get(idx).copied().unwrap_or(1);

    let mut seen = std::collections::HashMap::new();
    for (idx, &(u, v)) in doc.edges.iter().enumerate() {
        let fail = |message: String| Error::Parse {
            line: edge_line(idx),
            message,
        };
        if u >= doc.vertices || v >= doc.vertices {
            return Err(fail(format!(
                "edge [{u}, {v}] has an endpoint outside 0..{}",
                doc.vertices
            )));
        }
        if u == v {
            return Err(fail(format!("edge [{u}, {v}] is a loop")));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), idx) {
            return Err(fail(format!(
                "edge [{u}, {v}] duplicates the edge on line {}",
                edge_line(first)
            )));
        }
    }

    let graph = Graph::new(doc.vertices, doc.edges).map_err(|e| Error::Parse {
        line: positions.edges_key,
        message: e.to_string(),
    })?;
    match doc.labels {
        None => Ok(graph),
        Some(raw) => {
            let fail = |message: String| Error::Parse {
                line: positions.labels_key,
                message,
            };
            let labels = raw
                .iter()
                .map(|s| s.parse::<EdgeLabel>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| fail(e.to_string()))?;
            graph.with_labels(labels).map_err(|e| fail(e.to_string()))
        }
    }
}

/// Emits the canonical document: one edge per line, labels on one line.
pub fn emit_graph(graph: &Graph) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"vertices\": {},\n", graph.vertex_count()));
    out.push_str("  \"edges\": [");
    for (idx, (u, v)) in graph.edges().iter().enumerate() {
        out.push_str(if idx == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    [{u}, {v}]"));
    }
    out.push_str(if graph.edge_count() == 0 {
        "]"
    } else {
        "\n  ]"
    });
    if let Some(labels) = graph.labels() {
        let quoted: Vec<String> = labels.iter().map(|l| format!("\"{l}\"")).collect();
        out.push_str(&format!(",\n  \"labels\": [{}]", quoted.join(", ")));
    }
    out.push_str("\n}\n");
    out
}

/// Line numbers of the `edges` entries and top-level keys, recovered with a
/// small tokenizer since serde does not expose spans.
struct KeyPositions {
    edges_key: usize,
    labels_key: usize,
    edge_lines: Vec<usize>,
}

impl KeyPositions {
    fn scan(text: &str) -> Self {
        let mut pos = KeyPositions {
            edges_key: 1,
            labels_key: 1,
            edge_lines: Vec::new(),
        };
        let mut line = 1;
        let mut depth = 0usize;
        let mut in_edges = false;
        let mut last_key: Option<(String, usize)> = None;
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            match c {
                '\n' => line += 1,
                '"' => {
                    let mut s = String::new();
                    let mut escaped = false;
                    for c in chars.by_ref() {
                        if c == '\n' {
                            line += 1;
                        }
                        if escaped {
                            escaped = false;
                        } else if c == '\\' {
                            escaped = true;
                        } else if c == '"' {
                            break;
                        } else {
                            s.push(c);
                        }
                    }
                    if depth == 1 {
                        match s.as_str() {
                            "edges" => pos.edges_key = line,
                            "labels" => pos.labels_key = line,
                            _ => {}
                        }
                        last_key = Some((s, line));
                    }
                }
                '[' | '{' => {
                    depth += 1;
                    if c == '[' && depth == 2 {
                        in_edges = matches!(&last_key, Some((k, _)) if k == "edges");
                    } else if c == '[' && depth == 3 && in_edges {
                        pos.edge_lines.push(line);
                    }
                }
                ']' | '}' => {
                    if depth == 2 {
                        in_edges = false;
                    }
                    depth = depth.saturating_sub(1);
                }
                _ => {}
            }
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_jahangir;

    #[test]
    fn parses_triangle() {
        let g = parse_graph(r#"{"vertices": 3, "edges": [[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.labels().is_none());
    }

    #[test]
    fn jahangir_round_trip() {
        for m in 3..=5 {
            let g = build_jahangir(m).unwrap();
            let text = emit_graph(&g);
            let back = parse_graph(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(emit_graph(&back), text);
        }
    }

    #[test]
    fn duplicate_edge_names_its_line() {
        let text =
            "{\n  \"vertices\": 3,\n  \"edges\": [\n    [0, 1],\n    [1, 2],\n    [2, 1]\n  ]\n}\n";
        match parse_graph(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 6);
                assert!(message.contains("line 5"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn loop_names_its_line() {
        let text = "{\"vertices\": 2,\n\"edges\": [[0, 1],\n[1, 1]]}";
        assert!(matches!(
            parse_graph(text),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(
            parse_graph("{\"vertices\": 2,\n\"edges\": [[0, 1]"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, 1]], "extra": 1}"#).is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, -1]]}"#).is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(
            parse_graph(r#"{"vertices": 2, "edges": [[0, 1]], "labels": ["e11", "e12"]}"#).is_err()
        );
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, 1]], "labels": ["bogus"]}"#).is_err());
    }
}
