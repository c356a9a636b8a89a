//! graph6 and adjacency-list JSON.

use super::{Edge, Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Encodes `g` in graph6 (no `>>graph6<<` header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(bad("graphs above 258047 vertices are not supported"));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated size field"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(bad(&format!("{n} vertices exceeds the supported maximum {MAX_VERTICES}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes, found {}", pairs.div_ceil(6), body.len())));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                g.insert_edge(i, j);
            }
            idx += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// `{"n": int, "edges": [[u, v], ...]}` with `u < v`, rows sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().iter().map(|e| [e.u, e.v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, &j.edges).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(j)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges()
    }
}
