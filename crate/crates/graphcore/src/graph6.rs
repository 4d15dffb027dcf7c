//! graph6 / digraph6 text codecs (McKay's formats): 6-bit chunks offset by
//! 63, column-major upper triangle for graphs, row-major full matrix for
//! digraphs. Decoding is strict: exact length, zero padding, bytes in
//! `63..=126`.

use crate::{Digraph, Graph, GraphError};

const OFFSET: u8 = 63;
const MAX_SHORT: u64 = 62;
const MAX_MEDIUM: u64 = 258_047;
const MAX_LONG: u64 = 68_719_476_735;

fn encode_order(n: u64, out: &mut Vec<u8>) -> Result<(), GraphError> {
    if n <= MAX_SHORT {
        out.push(OFFSET + n as u8);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    } else if n <= MAX_LONG {
        out.push(126);
        out.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    } else {
        return Err(GraphError::UnsupportedOrder(n));
    }
    Ok(())
}

/// Returns `(n, bytes consumed)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let first = *bytes.first().ok_or(GraphError::EmptyInput)?;
    if !(OFFSET..=126).contains(&first) {
        return Err(GraphError::BadByte {
            byte: first,
            pos: 0,
        });
    }
    if first != 126 {
        return Ok(((first - OFFSET) as usize, 1));
    }
    let second = *bytes.get(1).ok_or(GraphError::Truncated)?;
    let (count, start) = if second == 126 { (6, 2) } else { (3, 1) };
    let mut n: u64 = 0;
    for i in 0..count {
        let b = *bytes.get(start + i).ok_or(GraphError::Truncated)?;
        if !(OFFSET..=126).contains(&b) {
            return Err(GraphError::BadByte {
                byte: b,
                pos: start + i,
            });
        }
        n = (n << 6) | (b - OFFSET) as u64;
    }
    Ok((n as usize, start + count))
}

fn pack_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (5 - i);
            }
        }
        out.push(OFFSET + b);
    }
}

/// Strictly unpacks exactly `count` bits from all remaining `bytes`:
/// errors on short input, surplus bytes, or non-zero padding.
fn unpack_bits(bytes: &[u8], pos0: usize, count: usize) -> Result<Vec<bool>, GraphError> {
    let needed = count.div_ceil(6);
    if bytes.len() < needed {
        return Err(GraphError::Truncated);
    }
    if bytes.len() > needed {
        return Err(GraphError::TrailingGarbage);
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(GraphError::BadByte {
                byte: b,
                pos: pos0 + i,
            });
        }
        let v = b - OFFSET;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(GraphError::NonZeroPadding);
    }
    bits.truncate(count);
    Ok(bits)
}

impl Graph {
    /// Encodes in graph6. Labels are not part of the format and are dropped.
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
        encode_order(n as u64, &mut out).expect("desk-scale order");
        let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for v in 1..n {
            for u in 0..v {
                bits.push(self.has_edge(u, v));
            }
        }
        pack_bits(&bits, &mut out);
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    pub fn from_graph6(s: &str) -> Result<Self, GraphError> {
        let bytes = s.trim().as_bytes();
        let (n, consumed) = decode_order(bytes)?;
        let bit_count = n * n.saturating_sub(1) / 2;
        let bits = unpack_bits(&bytes[consumed..], consumed, bit_count)?;
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges)
    }
}

impl Digraph {
    /// Encodes in digraph6: `'&'`, the order, then the full adjacency
    /// matrix row-major.
    pub fn to_digraph6(&self) -> String {
        let n = self.n();
        let mut out = vec![b'&'];
        encode_order(n as u64, &mut out).expect("desk-scale order");
        let mut bits = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                bits.push(self.has_arc(u, v));
            }
        }
        pack_bits(&bits, &mut out);
        String::from_utf8(out).expect("digraph6 is ASCII")
    }

    pub fn from_digraph6(s: &str) -> Result<Self, GraphError> {
        let bytes = s.trim().as_bytes();
        if bytes.first() != Some(&b'&') {
            return Err(GraphError::MissingDigraphHeader);
        }
        let (n, consumed) = decode_order(&bytes[1..])?;
        let bits = unpack_bits(&bytes[1 + consumed..], 1 + consumed, n * n)?;
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if bits[u * n + v] {
                    if u == v {
                        return Err(GraphError::Loop(u));
                    }
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_arcs(n, &arcs)
    }
}
