//! The graph6 text format: a size field followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.push(126);
        out.push(126);
        push_sextets(&mut out, n as u64, 6);
    }

    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header and trailing
/// newline are accepted. Byte offsets in errors refer to the input as given.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let body = text[start..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let err = |pos: usize, message: &str| Error::Graph6 {
        offset: start + pos,
        message: message.to_string(),
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the graph6 range 63..=126"));
        }
    }
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 8-byte size field"));
        }
        (read_sextets(&bytes[2..8]) as usize, 8)
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 4-byte size field"));
        }
        (read_sextets(&bytes[1..4]) as usize, 4)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let available = bytes.len() - pos;
    if available < needed {
        return Err(err(
            bytes.len(),
            &format!("truncated adjacency: expected {needed} bytes, found {available}"),
        ));
    }
    if available > needed {
        return Err(err(pos + needed, "trailing bytes after adjacency data"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = bytes[pos] - BIAS;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) && current & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err(pos - 1, "non-zero padding bits"));
    }
    Graph::from_edges(n, edges)
}

fn read_sextets(bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS))
}
