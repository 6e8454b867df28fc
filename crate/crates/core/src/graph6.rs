//! graph6 text encoding.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! The order is written as one byte `n + 63` for `n <= 62`, or as `~`
//! followed by three 6-bit bytes for larger orders. The upper triangle of
//! the adjacency matrix follows in column-major order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), packed into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored. Offsets in errors count from the first byte of
/// the encoded graph.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated order field"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(1, "orders above 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(parse_err(0, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != expected {
        let offset = start + body.len().min(expected);
        return Err(parse_err(
            offset,
            format!(
                "expected {expected} data bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }
    let pad = expected * 6 - nbits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(start + expected - 1, "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
