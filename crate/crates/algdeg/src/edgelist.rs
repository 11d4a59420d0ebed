//! Plain-text edge list format.
//!
//! The first significant line is a header `n <count>`; every following line
//! holds one edge as two 0-based vertex indices. `#` starts a comment that
//! runs to end of line; blank lines are skipped. Parsing is strict — self
//! loops, duplicate edges, and out-of-range endpoints are errors, each
//! reported with its 1-based line number. The writer is byte-deterministic:
//! header, edges in sorted order, one per line, trailing newline.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum EdgeListError {
    #[error("missing header line `n <count>`")]
    MissingHeader,
    #[error("line {line}: expected header `n <count>`, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: invalid vertex count {found:?}")]
    BadCount { line: usize, found: String },
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graphs need at least one vertex")]
    ZeroVertices,
    #[error("line {line}: expected an edge `u v`, found {found:?}")]
    BadEdge { line: usize, found: String },
    #[error("line {line}: self loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for {n} vertices")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse the edge-list format.
pub fn parse_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let Some(count) = n else {
            let mut parts = text.split_ascii_whitespace();
            let tag = parts.next().unwrap_or("");
            let value = parts.next();
            if tag != "n" || value.is_none() || parts.next().is_some() {
                return Err(EdgeListError::BadHeader { line, found: text.to_string() });
            }
            let value = value.unwrap();
            let parsed: usize = value
                .parse()
                .map_err(|_| EdgeListError::BadCount { line, found: value.to_string() })?;
            if parsed == 0 {
                return Err(EdgeListError::ZeroVertices);
            }
            if parsed > MAX_VERTICES {
                return Err(EdgeListError::TooManyVertices(parsed));
            }
            n = Some(parsed);
            continue;
        };
        let mut parts = text.split_ascii_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(EdgeListError::BadEdge { line, found: text.to_string() });
        };
        let parse_vertex = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| EdgeListError::BadEdge { line, found: text.to_string() })
        };
        let u = parse_vertex(a)?;
        let v = parse_vertex(b)?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line, v: u });
        }
        for w in [u, v] {
            if w >= count {
                return Err(EdgeListError::OutOfRange { line, v: w, n: count });
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(EdgeListError::DuplicateEdge { line, u: key.0, v: key.1 });
        }
        pairs.push(key);
    }
    let Some(count) = n else {
        return Err(EdgeListError::MissingHeader);
    };
    Ok(Graph::new(count, &pairs)?)
}

/// Serialize a graph in the edge-list format (sorted edges, trailing newline).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}
