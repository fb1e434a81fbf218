//! Plain-text edge lists: a header line `n m` followed by `m` lines `i j`
//! with 0-based vertex labels.  Blank lines are ignored.

use super::{Graph, GraphError};
use std::fmt::Write as _;
use thiserror::Error;

/// Errors produced while reading the text edge-list format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("line {lineno}: expected two integers, got {line:?}")]
    BadLine { lineno: usize, line: String },
    #[error("header declares {expected} edges but {got} edge lines follow")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn two_integers(line: &str) -> Option<(u64, u64)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses one graph from the `n m` / `i j` text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty());
    let (lineno, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = two_integers(header).ok_or_else(|| EdgeListError::BadLine {
        lineno,
        line: header.to_string(),
    })?;
    let mut edges = Vec::with_capacity(m as usize);
    for (lineno, line) in lines {
        let (u, v) = two_integers(line).ok_or_else(|| EdgeListError::BadLine {
            lineno,
            line: line.to_string(),
        })?;
        // Out-of-range labels are reported by the graph constructor; clamp
        // huge values into u32 without wrapping so the report stays honest.
        edges.push((u.min(u64::from(u32::MAX)) as u32, v.min(u64::from(u32::MAX)) as u32));
    }
    if edges.len() != m as usize {
        return Err(EdgeListError::WrongEdgeCount { expected: m as usize, got: edges.len() });
    }
    Ok(Graph::from_edge_list(n as usize, edges)?)
}

/// Writes a graph in the `n m` / `i j` text format (trailing newline included).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n_vertices(), g.n_edges());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_of_a_path() {
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn blank_lines_are_ignored() {
        let g = parse_edge_list("3 1\n\n0 2\n\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);
    }

    #[test]
    fn header_is_required() {
        assert_eq!(parse_edge_list("   \n"), Err(EdgeListError::MissingHeader));
    }

    #[test]
    fn malformed_lines_carry_the_line_number() {
        let err = parse_edge_list("2 1\n0 x").unwrap_err();
        assert_eq!(err, EdgeListError::BadLine { lineno: 2, line: "0 x".into() });
    }

    #[test]
    fn edge_count_must_match_the_header() {
        let err = parse_edge_list("3 2\n0 1").unwrap_err();
        assert_eq!(err, EdgeListError::WrongEdgeCount { expected: 2, got: 1 });
    }

    #[test]
    fn graph_errors_pass_through() {
        let err = parse_edge_list("2 1\n1 1").unwrap_err();
        assert_eq!(err, EdgeListError::Graph(GraphError::SelfLoop { v: 1 }));
        let err = parse_edge_list("2 1\n0 5").unwrap_err();
        assert!(matches!(err, EdgeListError::Graph(GraphError::VertexOutOfRange { .. })));
    }
}
