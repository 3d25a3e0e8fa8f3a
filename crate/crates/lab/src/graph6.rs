//! graph6 codec, restricted to the single-byte header (`n <= 62`).
//!
//! Each byte carries six bits as `byte - 63`. The header byte is `n + 63`; the
//! body is the upper triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed
//! big-endian into 6-bit groups and zero-padded.

use koszul_core::Graph;
use thiserror::Error;

pub const MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed multi-byte header at offset {offset}")]
    BadHeader { offset: usize },
    #[error("graph6 header encodes n = {n}; only n <= {MAX_N} is supported")]
    TooLarge { n: usize },
    #[error("graph6 body truncated at offset {offset}: expected {expected} body bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("trailing bytes after graph6 body at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits in last body byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph6 string encodes zero vertices")]
    NoVertices,
}

/// Optional file header written by some tools.
const PREFIX: &str = ">>graph6<<";

pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim_end_matches(['\n', '\r']);
    let skip = if s.starts_with(PREFIX) { PREFIX.len() } else { 0 };
    let bytes = &s.as_bytes()[skip..];
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(k) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset: skip + k, byte: bytes[k] });
    }
    let n = header(bytes, skip)?;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: skip + bytes.len(), expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing { offset: skip + 1 + expected });
    }
    let mut bits = Vec::with_capacity(nbits);
    for &b in body {
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Graph6Error::NonzeroPadding { offset: skip + bytes.len() - 1 });
    }
    bits.truncate(nbits);
    Ok(Graph::from_adjacency_bits(n, &bits).expect("bit count matches n"))
}

// Decodes the header, rejecting (but still reading) the multi-byte forms.
fn header(bytes: &[u8], skip: usize) -> Result<usize, Graph6Error> {
    let value = |range: core::ops::Range<usize>| -> Result<usize, Graph6Error> {
        let group = bytes.get(range).ok_or(Graph6Error::BadHeader { offset: skip + bytes.len() })?;
        Ok(group.iter().fold(0, |acc, &b| acc << 6 | usize::from(b - 63)))
    };
    match bytes {
        [126, 126, ..] => Err(Graph6Error::TooLarge { n: value(2..8)? }),
        [126, ..] => Err(Graph6Error::TooLarge { n: value(1..4)? }),
        [b, ..] => Ok(usize::from(b - 63)),
        [] => Err(Graph6Error::Empty),
    }
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let bits = g.adjacency_bits();
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push(char::from(n as u8 + 63));
    for chunk in bits.chunks(6) {
        let v = chunk.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | u8::from(b) << (5 - k));
        out.push(char::from(v + 63));
    }
    Ok(out)
}

/// Cheap syntactic test used by input auto-detection.
pub fn looks_like_graph6(line: &str) -> bool {
    let b = line.as_bytes();
    let Some(&h) = b.first() else { return false };
    if !b.iter().all(|c| (63..=126).contains(c)) {
        return false;
    }
    if h == 126 {
        return true;
    }
    let n = usize::from(h - 63);
    b.len() == 1 + (n * n.saturating_sub(1) / 2).div_ceil(6)
}
