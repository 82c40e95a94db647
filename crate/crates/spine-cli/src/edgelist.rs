//! Whitespace-separated edge lists.
//!
//! One edge per line: two labels separated by whitespace. Lines starting
//! with `#` are comments, blank lines are ignored, and `node <label>`
//! declares an isolated node. Labels are arbitrary non-whitespace strings,
//! mapped to dense node ids in first-appearance order. Duplicate edges
//! collapse with a count; self-loops are errors.

use spine_core::{Graph, GraphBuilder};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: self-loop on '{label}'")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: expected two labels (or 'node <label>'), found {found} token(s)")]
    TokenCount { line: usize, found: usize },
}

#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Edges that repeated earlier lines and were collapsed.
    pub duplicate_edges: u64,
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut builder = GraphBuilder::new();
    let mut duplicate_edges = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["node", label] => {
                builder.node(label);
            }
            [a, b] => match builder.edge(a, b) {
                Ok(true) => {}
                Ok(false) => duplicate_edges += 1,
                Err(_) => {
                    return Err(ParseError::SelfLoop {
                        line,
                        label: (*a).to_string(),
                    })
                }
            },
            other => {
                return Err(ParseError::TokenCount {
                    line,
                    found: other.len(),
                })
            }
        }
    }
    Ok(ParsedGraph {
        graph: builder.build(),
        duplicate_edges,
    })
}

/// Inverse of [`parse_edge_list`] up to label→id mapping: every edge once,
/// then `node` lines for isolated nodes.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    for v in g.nodes() {
        if g.degree(v) == 0 {
            out.push_str("node ");
            out.push_str(g.label(v));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_path() {
        let parsed = parse_edge_list("a b\nb c\n").unwrap();
        assert_eq!(parsed.graph.node_count(), 3);
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(parsed.duplicate_edges, 0);
    }

    #[test]
    fn duplicate_edges_are_counted() {
        let parsed = parse_edge_list("a b\na b\nb a\n").unwrap();
        assert_eq!(parsed.graph.edge_count(), 1);
        assert_eq!(parsed.duplicate_edges, 2);
    }

    #[test]
    fn self_loop_reports_its_line() {
        let err = parse_edge_list("a a\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::SelfLoop {
                line: 1,
                label: "a".into()
            }
        );
    }

    #[test]
    fn comments_blanks_and_isolates() {
        let text = "# a comment\n\na b\nnode lonely\n   \n";
        let parsed = parse_edge_list(text).unwrap();
        assert_eq!(parsed.graph.node_count(), 3);
        assert!(parsed.graph.find_label("lonely").is_some());
    }

    #[test]
    fn bad_token_counts_error() {
        assert_eq!(
            parse_edge_list("a b c\n").unwrap_err(),
            ParseError::TokenCount { line: 1, found: 3 }
        );
        assert_eq!(
            parse_edge_list("# ok\nsolo\n").unwrap_err(),
            ParseError::TokenCount { line: 2, found: 1 }
        );
    }
}
