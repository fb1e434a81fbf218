//! The graph6 interchange format.
//!
//! A graph6 record is printable ASCII, every byte in `63..=126`:
//!
//! * a size header `N(n)` — one byte `n + 63` for `n <= 62`, or `126`
//!   followed by three 6-bit bytes for `n <= 258047`, or `126 126` followed
//!   by six 6-bit bytes for `n < 2^36` (6-bit groups are big-endian, each
//!   stored as `value + 63`);
//! * the upper triangle of the adjacency matrix as a bit vector read column
//!   by column — `x(0,1), x(0,2), x(1,2), x(0,3), ...` — packed six bits per
//!   byte, most significant bit first, zero-padded to a byte boundary.
//!
//! Writing always emits the shortest header, so write∘parse and parse∘write
//! are both identities; parsing rejects malformed input with the byte offset
//! where the problem sits.

use super::Graph;
use thiserror::Error;

/// Errors produced while decoding a graph6 record.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    /// The record is empty.
    #[error("empty graph6 record")]
    Empty,
    /// A byte falls outside the printable graph6 range `63..=126`.
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    /// The record ends before the declared adjacency payload is complete.
    #[error("record truncated at offset {offset}: expected {expected} bytes, got {got}")]
    Truncated { offset: usize, expected: u128, got: usize },
    /// Bytes remain after the declared payload.
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    /// Padding bits after the last adjacency bit are not all zero.
    #[error("nonzero padding bits in final payload byte at offset {offset}")]
    TrailingBits { offset: usize },
}

const OFFSET: u8 = 63;
/// graph6 can address at most `2^36 - 1` vertices.
const MAX_N: u64 = (1 << 36) - 1;

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: offset as u128 + 1,
            got: bytes.len(),
        }),
        Some(&b) if !(OFFSET..=126).contains(&b) => {
            Err(Graph6Error::ByteOutOfRange { offset, byte: b })
        }
        Some(&b) => Ok(u64::from(b - OFFSET)),
    }
}

/// Decodes the size header; returns `(n, header_len)`.
fn parse_header(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if sextet(bytes, 0)? < 63 {
        return Ok((sextet(bytes, 0)?, 1));
    }
    // First byte is 126: long form, 18 or 36 bits.
    if sextet(bytes, 1)? < 63 {
        let n = (sextet(bytes, 1)? << 12) | (sextet(bytes, 2)? << 6) | sextet(bytes, 3)?;
        return Ok((n, 4));
    }
    let mut n = 0u64;
    for k in 0..6 {
        n = (n << 6) | sextet(bytes, 2 + k)?;
    }
    Ok((n, 8))
}

/// Parses one graph6 record (no surrounding whitespace or newline).
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    // Reject non-graph6 bytes up front so a corrupt byte is reported at its
    // own offset rather than as a knock-on length error.
    if let Some((offset, &byte)) =
        bytes.iter().enumerate().find(|&(_, &b)| !(OFFSET..=126).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    let (n, header_len) = parse_header(bytes)?;
    let pairs = n as u128 * (n.saturating_sub(1)) as u128 / 2;
    let payload_len = pairs.div_ceil(6);
    let expected = header_len as u128 + payload_len;
    if (bytes.len() as u128) < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
            got: bytes.len(),
        });
    }
    if (bytes.len() as u128) > expected {
        return Err(Graph6Error::TrailingData { offset: expected as usize });
    }
    // The record length matched, so n(n-1)/2 bits fit in memory.
    let n = n as usize;
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = sextet(bytes, header_len + bit / 6)?;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                edges.push((i as u32, j as u32));
            }
            bit += 1;
        }
    }
    // Remaining bits of the final byte must be zero padding.
    if bit % 6 != 0 {
        let mask = (1u64 << (6 - bit % 6)) - 1;
        if current & mask != 0 {
            return Err(Graph6Error::TrailingBits { offset: header_len + bit / 6 });
        }
    }
    // Column-major upper-triangle order is already sorted by (j, i); the
    // constructor wants lexicographic (i, j).
    edges.sort_unstable();
    Ok(Graph::from_normalized(n, edges))
}

/// Encodes a graph as a graph6 record with the shortest valid header.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n_vertices() as u64;
    assert!(n <= MAX_N, "graph6 cannot address {n} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + OFFSET);
        }
    }
    let pairs = g.n_vertices() * g.n_vertices().saturating_sub(1) / 2;
    let payload_start = out.len();
    out.resize(payload_start + pairs.div_ceil(6), OFFSET);
    for &(i, j) in g.edges() {
        let k = (j as usize) * (j as usize - 1) / 2 + i as usize;
        out[payload_start + k / 6] += 1 << (5 - k % 6);
    }
    // Every byte is printable ASCII by construction.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

// ============================================================================
// Tests
// ============================================================================
