//! The edge-list interchange format.
//!
//! Graphs travel as plain text: a `n m` header line followed by one
//! `u v` line per edge, 0-based. Full or trailing `#` comments are
//! allowed. Trees use the same body prefixed by a `# tree-of: <hash>`
//! line binding them to the canonical fingerprint of their host graph;
//! loading a tree against a graph with a different fingerprint is a hard
//! error.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

const TREE_OF_PREFIX: &str = "# tree-of:";

/// Canonical serialization; hashing these bytes yields the graph
/// fingerprint.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let (u, v) = e.endpoints();
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_body(text)?;
    Graph::new(n, &edges)
}

pub fn write_tree(t: &SpanningTree) -> String {
    let n = t.vertex_count();
    let mut out = format!("{} {}\n{} {}\n", TREE_OF_PREFIX, t.host(), n, t.edges().len());
    for e in t.edges() {
        let (u, v) = e.endpoints();
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a tree file and validates it as a spanning tree of `host`,
/// first checking the `# tree-of:` binding against the host fingerprint.
pub fn parse_tree(text: &str, host: &Graph) -> Result<SpanningTree> {
    let mut bound_to = None;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix(TREE_OF_PREFIX) {
            bound_to = Some(rest.trim().to_string());
            break;
        }
    }
    let found = bound_to.ok_or(Error::MissingTreeHostHash)?;
    let expected = host.fingerprint().to_hex();
    if found != expected {
        return Err(Error::TreeHostHashMismatch { expected, found });
    }
    let (n, edges) = parse_body(text)?;
    if n != host.vertex_count() {
        return Err(Error::Parse {
            line: 0,
            message: format!(
                "tree has {n} vertices but host has {}",
                host.vertex_count()
            ),
        });
    }
    let edges: Result<Vec<Edge>> = edges
        .into_iter()
        .map(|(a, b)| Edge::try_new(a, b))
        .collect();
    SpanningTree::new(host, edges?)
}

/// One `index label` line per vertex.
pub fn write_labels(labels: &[String]) -> String {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{i} {l}\n"))
        .collect()
}

fn parse_body(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace().map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("expected a non-negative integer, got `{tok}`"),
            })
        });
        let a = fields.next().ok_or(Error::Parse {
            line: idx + 1,
            message: "missing field".into(),
        })??;
        let b = fields.next().ok_or(Error::Parse {
            line: idx + 1,
            message: "expected two fields".into(),
        })??;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: idx + 1,
                message: "expected exactly two fields".into(),
            });
        }
        match header {
            None => header = Some((a, b)),
            Some(_) => edges.push((a, b)),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges but {} follow", edges.len()),
        });
    }
    Ok((n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn graph_round_trip_is_identity() {
        let g = corpus::petersen();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(g.fingerprint(), back.fingerprint());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a graph\n\n3 2 # header\n0 1\n# middle\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(matches!(
            parse_graph("3 2\n0 1\n").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_graph("3 1\n0 x\n").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_graph("").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_graph("2 1\n0 1 2\n").unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn tree_round_trip_keeps_host_binding() {
        let g = corpus::wheel(5);
        let t = SpanningTree::new(&g, [Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3), Edge::new(0, 4)])
            .unwrap();
        let text = write_tree(&t);
        let back = parse_tree(&text, &g).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn tree_with_wrong_host_is_rejected() {
        let g = corpus::wheel(5);
        let t = SpanningTree::new(&g, [Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3), Edge::new(0, 4)])
            .unwrap();
        let text = write_tree(&t);
        let other = corpus::cycle(5);
        assert!(matches!(
            parse_tree(&text, &other).unwrap_err(),
            Error::TreeHostHashMismatch { .. }
        ));
    }

    #[test]
    fn tree_without_binding_is_rejected() {
        let g = corpus::cycle(4);
        let text = "4 3\n0 1\n1 2\n2 3\n";
        assert_eq!(parse_tree(text, &g).unwrap_err(), Error::MissingTreeHostHash);
    }

    #[test]
    fn labels_format() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert_eq!(write_labels(&labels), "0 a\n1 b\n");
    }
}
