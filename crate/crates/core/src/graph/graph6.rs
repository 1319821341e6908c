//! graph6 reading and writing.
//!
//! Format: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte,
//! each byte offset by 63.

use super::CubicGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 1 << 16;

pub fn to_graph6(g: &CubicGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let bits = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| adj[i * n + j]);
    push_bits(bits, &mut out);
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn push_bits(bits: impl Iterator<Item = bool>, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored. Byte offsets in errors are relative to the start of
/// `text`.
pub fn from_graph6(text: &str) -> Result<CubicGraph> {
    let line = text.trim_end();
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[start..];
    let err = |at: usize, message: &str| Error::Parse { offset: start + at, message: message.into() };

    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the graph6 range 63..=126"));
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated vertex count"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(0, "graphs above 65536 vertices are not supported"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(err(
            bytes.len().min(pos + needed),
            &format!("expected {needed} adjacency bytes for {n} vertices, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if bit == pairs {
                break 'outer;
            }
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += needed;
    if pairs % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    CubicGraph::from_edges(n, edges)
}

/// Reads every non-empty line of a graph6 corpus.
pub fn read_graph6_lines(text: &str) -> Result<Vec<CubicGraph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(from_graph6).collect()
}
