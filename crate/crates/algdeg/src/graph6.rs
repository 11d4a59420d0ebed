//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column-major order — bits (0,1), (0,2), (1,2), (0,3), ... — into 6-bit
//! groups, most significant bit first, each group offset by 63 into printable
//! ASCII. A header byte `n+63` carries the vertex count for n <= 62; larger
//! counts use `~` plus three bytes holding an 18-bit big-endian value. The
//! optional `>>graph6<<` prefix is accepted. Parsing is strict: exact length,
//! zero padding bits, and printable data bytes only, with byte positions in
//! every error. sparse6 (`:`) and digraph6 (`&`) inputs are rejected
//! explicitly rather than misread.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("sparse6 input (leading ':') is not supported")]
    Sparse6Unsupported,
    #[error("digraph6 input (leading '&') is not supported")]
    Digraph6Unsupported,
    #[error("invalid byte {byte:#04x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated vertex-count header at position {0}")]
    TruncatedHeader(usize),
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graphs need at least one vertex")]
    ZeroVertices,
    #[error("expected {expected} data bytes after the header, found {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("nonzero padding bit in final group at position {0}")]
    NonZeroPadding(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const OFFSET: u8 = 63;
const PREFIX: &[u8] = b">>graph6<<";

/// Decode a graph6 string. A single trailing newline is tolerated.
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = input.as_bytes();
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    let mut pos = 0usize;
    if bytes.starts_with(PREFIX) {
        pos += PREFIX.len();
    }
    let rest = &bytes[pos..];
    if rest.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if rest[0] == b':' {
        return Err(Graph6Error::Sparse6Unsupported);
    }
    if rest[0] == b'&' {
        return Err(Graph6Error::Digraph6Unsupported);
    }
    let (n, header_len) = parse_count(rest, pos)?;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let data = &rest[header_len..];
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { expected, actual: data.len() });
    }
    let data_start = pos + header_len;
    let mut pairs = Vec::new();
    let mut bit = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte { pos: data_start + bit / 6, byte });
            }
            let group = byte - OFFSET;
            if group >> (5 - bit % 6) & 1 == 1 {
                pairs.push((u, v));
            }
            bit += 1;
            if bit == bit_count {
                break 'cols;
            }
        }
    }
    // Validate the remaining bytes' range and the final group's padding.
    for (i, &byte) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos: data_start + i, byte });
        }
    }
    if bit_count % 6 != 0 && expected > 0 {
        let last = data[expected - 1] - OFFSET;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding(data_start + expected - 1));
        }
    }
    Ok(Graph::new(n, &pairs)?)
}

fn parse_count(rest: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let b0 = rest[0];
    if b0 == b'~' {
        // Extended header; we only ever need the 3-byte form (n < 2^18).
        if rest.len() >= 2 && rest[1] == b'~' {
            return Err(Graph6Error::TooManyVertices(usize::MAX));
        }
        if rest.len() < 4 {
            return Err(Graph6Error::TruncatedHeader(base + rest.len()));
        }
        let mut n = 0usize;
        for (i, &b) in rest[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte { pos: base + 1 + i, byte: b });
            }
            n = n << 6 | (b - OFFSET) as usize;
        }
        Ok((n, 4))
    } else {
        if !(OFFSET..=125).contains(&b0) {
            return Err(Graph6Error::InvalidByte { pos: base, byte: b0 });
        }
        Ok(((b0 - OFFSET) as usize, 1))
    }
}

/// Encode a graph as a graph6 string (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
