use std::collections::HashSet;
use std::fmt::Write as _;

use super::Graph;
use crate::error::GraphError;

/// Parses the DIMACS edge format: `c` comment lines, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based endpoints.
///
/// The header's edge count must equal the number of distinct edges read, and a
/// repeated edge is rejected rather than merged.
pub fn parse_dimacs(text: &[u8]) -> Result<Graph, GraphError> {
    let text = String::from_utf8_lossy(text);
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    let mut duplicate = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(malformed_header(line_no, "second problem line"));
                }
                match fields.next() {
                    Some("edge" | "edges" | "col") => {}
                    _ => return Err(malformed_header(line_no, "expected `p edge <n> <m>`")),
                }
                let n = parse_field(fields.next(), line_no, "vertex count")?;
                let m = parse_field(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(malformed_header(line_no, "trailing fields"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(malformed_header(line_no, "edge before problem line"));
                };
                let u = parse_endpoint(fields.next(), line_no)?;
                let v = parse_endpoint(fields.next(), line_no)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(GraphError::VertexOutOfRange { vertex: x, n });
                    }
                }
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) && duplicate.is_none() {
                    duplicate = Some(key);
                }
                pairs.push((u, v));
            }
            Some(other) => {
                return Err(GraphError::MalformedEdge {
                    line: line_no,
                    reason: format!("unknown line type `{other}`"),
                })
            }
            None => {}
        }
    }

    let (n, m) = header.ok_or_else(|| malformed_header(0, "missing problem line"))?;
    if seen.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            declared: m,
            found: seen.len(),
        });
    }
    if let Some((u, v)) = duplicate {
        return Err(GraphError::DuplicateEdge(u, v));
    }
    Graph::from_edge_list(n, &pairs)
}

/// Writes `g` in the format read by [`parse_dimacs`], edges in ascending order.
pub fn write_dimacs(g: &Graph, seed: Option<u64>) -> String {
    let mut out = String::with_capacity(16 + g.m() * 12);
    if let Some(seed) = seed {
        let _ = writeln!(out, "c generated seed={seed}");
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

fn malformed_header(line: usize, reason: &str) -> GraphError {
    GraphError::MalformedHeader {
        line,
        reason: reason.to_string(),
    }
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| malformed_header(line, &format!("bad {what}")))
}

fn parse_endpoint(field: Option<&str>, line: usize) -> Result<usize, GraphError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| GraphError::MalformedEdge {
            line,
            reason: "expected `e <u> <v>`".into(),
        })
}
