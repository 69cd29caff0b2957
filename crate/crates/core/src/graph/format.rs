//! graph6 encoding and DIMACS `.col` export.
//!
//! graph6 writes N(n) followed by the upper triangle of the adjacency
//! matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
//! big-endian into 6-bit groups, each offset by 63.

use std::fmt::Write;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.is_adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::syntax(skip + pos, "byte outside the graph6 range 63..=126"));
    }
    let Some(&first) = body.first() else {
        return Err(Error::syntax(skip, "empty graph6 string"));
    };
    let (n, data) = if first < 126 {
        ((first - OFFSET) as usize, &body[1..])
    } else {
        if body.len() < 4 || body[1] == 126 {
            return Err(Error::syntax(skip + 1, "unsupported graph6 size prefix"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        (n, &body[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::limit(format!(
            "graph6 declares {n} vertices, cap is {MAX_VERTICES}"
        )));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Error::syntax(
            skip + body.len() - data.len(),
            format!("expected {expected} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let bit = |k: usize| (data[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 && (bit_count..expected * 6).any(bit) {
        return Err(Error::syntax(
            skip + body.len() - 1,
            "non-zero padding bits in final graph6 byte",
        ));
    }
    Graph::from_edges(n, &edges)
}

/// DIMACS `.col` text: `p edge n m` followed by 1-based `e u v` lines.
pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to String");
    }
    out
}
