//! graph6 encoding: a size prefix followed by the upper triangle of the adjacency matrix,
//! read column by column, packed six bits per printable byte (value + 63).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let six = |i: usize| (bytes[i] - 63) as usize;

    let (n, start) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated 18-bit vertex count"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(base + bytes.len(), "truncated 36-bit vertex count"));
        }
        let n = (2..8).fold(0usize, |acc, i| (acc << 6) | six(i));
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != need {
        return Err(err(
            base + start + data.len().min(need),
            format!(
                "expected {need} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }

    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = (data[k / 6] - 63) as usize;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = (data[need - 1] - 63) as usize;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + start + need - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
