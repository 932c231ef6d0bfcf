//! graph6 encoding (one graph per line).
//!
//! Size header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by
//! three 6-bit groups. Adjacency bits cover the upper triangle in column
//! order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six per byte and offset by 63.

use crate::error::{Graph6Error, GraphError, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::NonPrintable { offset, byte }.into());
    }
    let (n, header_len) = if bytes[0] != LONG_HEADER {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        // 258048 <= n needs the 8-byte form, which is far beyond MAX_VERTICES.
        if bytes.len() < 4 || bytes[1] == LONG_HEADER {
            return Err(Graph6Error::MalformedHeader.into());
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader.into());
        }
        (n, 4)
    };
    let mut g = Graph::new(n)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        }
        .into());
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage(data.len() - expected).into());
    }
    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding.into());
    }
    Ok(g)
}

/// Parses a corpus: one graph per line, blank lines ignored, optional
/// `>>graph6<<` prefix, trailing `\r` tolerated.
pub fn decode_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, GraphError)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.is_empty())
        .map(|(no, line)| {
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            decode(line).map_err(|e| (no, e))
        })
        .collect()
}

/// One graph per line, LF-terminated.
pub fn encode_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode(g));
        out.push('\n');
    }
    out
}
