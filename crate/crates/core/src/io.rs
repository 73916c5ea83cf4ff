//! Plain-text edge lists.
//!
//! The format accepted by the CLI and produced for replay files:
//!
//! ```text
//! # full-line comments start with '#'
//! n 5          <- optional header fixing the vertex count
//! 0 1
//! 1 2
//! ```
//!
//! Blank lines are skipped. Without a header the vertex count is one more
//! than the largest index mentioned. Vertex labels are the indices
//! themselves, so the label-to-index mapping is the identity and two parses
//! of the same file always yield the same graph.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    /// Malformed text: not a graph description at all.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("parse error: no edges in input")]
    EmptyInput,
    /// Well-formed text describing an invalid graph.
    #[error("invalid graph{}: {source}", at_line(.line))]
    Invalid {
        line: Option<usize>,
        source: GraphError,
    },
}

fn at_line(line: &Option<usize>) -> String {
    line.map_or(String::new(), |l| format!(" at line {l}"))
}

impl EdgeListError {
    /// True for structural (validation) failures as opposed to unreadable
    /// input; the CLI maps the two cases to different exit codes.
    pub fn is_validation(&self) -> bool {
        matches!(self, EdgeListError::Invalid { .. })
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut saw_significant_line = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_significant_line && tokens[0] == "n" {
            saw_significant_line = true;
            if tokens.len() != 2 {
                return Err(EdgeListError::Parse {
                    line: line_no,
                    message: "header must be `n <count>`".into(),
                });
            }
            declared_n = Some(parse_index(tokens[1], line_no)?);
            continue;
        }
        saw_significant_line = true;
        if tokens.len() != 2 {
            return Err(EdgeListError::Parse {
                line: line_no,
                message: format!("expected `u v`, got {} token(s)", tokens.len()),
            });
        }
        let u = parse_index(tokens[0], line_no)?;
        let v = parse_index(tokens[1], line_no)?;
        if u == v {
            return Err(EdgeListError::Invalid {
                line: Some(line_no),
                source: GraphError::LoopEdge(u),
            });
        }
        if let Some(n) = declared_n {
            if let Some(&bad) = [u, v].iter().find(|&&x| x >= n) {
                return Err(EdgeListError::Invalid {
                    line: Some(line_no),
                    source: GraphError::IndexOutOfRange { index: bad, n },
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key, line_no).is_some() {
            return Err(EdgeListError::Invalid {
                line: Some(line_no),
                source: GraphError::DuplicateEdge(key.0, key.1),
            });
        }
        edges.push((u, v));
        edge_lines.push(line_no);
    }

    if edges.is_empty() && declared_n.is_none() {
        return Err(EdgeListError::EmptyInput);
    }
    let n = declared_n
        .unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edge_list(n, &edges).map_err(|source| EdgeListError::Invalid {
        line: None,
        source,
    })
}

fn parse_index(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::Parse {
        line,
        message: format!("expected a non-negative integer, got `{token}`"),
    })
}

/// Renders a graph in the format accepted by [`parse_edge_list`], header
/// included so isolated trailing vertices could never be dropped.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// The comment lines of an edge-list file, `#` stripped; replay files store
/// their generation parameters this way.
pub fn comment_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| l.starts_with('#'))
        .map(|l| l.trim_start_matches('#').trim().to_string())
        .collect()
}
