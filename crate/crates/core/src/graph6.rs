//! Short-form graph6 codec (`n <= 62`, no header).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte most significant bit first, each byte offset by 63, with
//! the final byte zero-padded.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("unsupported encoding ({0}); only short-form graph6 is accepted")]
    Unsupported(&'static str),
    #[error("truncated: {n} vertices need {expected} bytes, found {found}")]
    Truncated { n: usize, expected: usize, found: usize },
    #[error("trailing data: {n} vertices need {expected} bytes, found {found}")]
    TrailingData { n: usize, expected: usize, found: usize },
    #[error("non-zero padding bits in final byte at position {position}")]
    NonZeroPadding { position: usize },
    #[error("graph has {0} vertices, graph6 short form supports at most 62")]
    TooLarge(usize),
}

/// A graph6 string. Holds only bytes in `63..=126`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph6Code(String);

impl Graph6Code {
    pub fn parse(text: &str) -> Result<Self, Graph6Error> {
        decode(text)?;
        Ok(Graph6Code(text.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        decode(&self.0).expect("validated at construction")
    }
}

impl std::fmt::Display for Graph6Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    match first {
        b'>' => return Err(Graph6Error::Unsupported("header")),
        b':' => return Err(Graph6Error::Unsupported("sparse6")),
        b';' => return Err(Graph6Error::Unsupported("incremental sparse6")),
        b'&' => return Err(Graph6Error::Unsupported("digraph6")),
        126 => return Err(Graph6Error::Unsupported("long-form graph6 (n > 62)")),
        63..=125 => {}
        byte => return Err(Graph6Error::InvalidByte { position: 0, byte }),
    }
    let n = (first - 63) as usize;
    let expected = data_len(n);
    if let Some((i, &byte)) = data.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::InvalidByte { position: i + 1, byte });
    }
    if data.len() < expected {
        return Err(Graph6Error::Truncated { n, expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { n, expected, found: data.len() });
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad_bits = 6 - k % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { position: expected });
        }
    }
    Ok(Graph::from_rows(rows).expect("decoded rows are symmetric and loop-free"))
}

pub fn encode(g: &Graph) -> Result<Graph6Code, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(Graph6Code(String::from_utf8(out).expect("graph6 bytes are ASCII")))
}
