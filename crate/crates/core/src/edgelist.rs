//! Plain-text edge-list format.
//!
//! ```text
//! c optional comment
//! # also a comment
//! p <n> <m>
//! e <u> <v>      (exactly m lines, 0-based ids)
//! ```
//!
//! The first non-comment line must be the `p` header. Blank lines are
//! ignored; both LF and CRLF line endings are accepted.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected 'p <n> <m>' header, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected 'e <u> <v>'")]
    BadEdge { line: usize },
    #[error("line {line}: unexpected line {found:?}")]
    UnexpectedLine { line: usize, found: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing 'p <n> <m>' header")]
    MissingHeader,
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#') || line.starts_with('c')
}

/// Parse a graph from edge-list text.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        let tag = tokens.next().unwrap();
        match (tag, &header) {
            ("p", None) => {
                let n = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let m = tokens.next().and_then(|t| t.parse::<usize>().ok());
                match (n, m, tokens.next()) {
                    (Some(n), Some(m), None) => header = Some((n, m)),
                    _ => {
                        return Err(ParseError::BadHeader {
                            line: line_no,
                            found: line.to_string(),
                        })
                    }
                }
            }
            ("e", Some(_)) => {
                let u = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let v = tokens.next().and_then(|t| t.parse::<usize>().ok());
                match (u, v, tokens.next()) {
                    (Some(u), Some(v), None) => {
                        edges.push((u, v));
                        edge_lines.push(line_no);
                    }
                    _ => return Err(ParseError::BadEdge { line: line_no }),
                }
            }
            _ => {
                return Err(ParseError::UnexpectedLine {
                    line: line_no,
                    found: line.to_string(),
                })
            }
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|source| {
        // attribute the failure to the offending edge line where possible
        let line = match source {
            GraphError::SelfLoop(u) => edge_lines
                .iter()
                .zip(&edges)
                .find(|(_, &(a, b))| a == u && a == b)
                .map(|(&l, _)| l),
            GraphError::DuplicateEdge(u, v) => {
                let mut seen = std::collections::HashSet::new();
                edge_lines
                    .iter()
                    .zip(&edges)
                    .find(|(_, &(a, b))| {
                        let key = (a.min(b), a.max(b));
                        key == (u, v) && !seen.insert(key)
                    })
                    .map(|(&l, _)| l)
            }
            GraphError::VertexOutOfRange(u, _) => edge_lines
                .iter()
                .zip(&edges)
                .find(|(_, &(a, b))| a == u || b == u)
                .map(|(&l, _)| l),
        };
        ParseError::Graph {
            line: line.unwrap_or(0),
            source,
        }
    })
}

/// Serialize a graph in the edge-list format, edges in normalized sorted
/// order, LF line endings.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p {} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u, v));
    }
    out
}
