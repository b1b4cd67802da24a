//! graph6 encoding (McKay's format).
//!
//! The encoder never writes the optional `>>graph6<<` header; the decoder
//! accepts it.

use crate::bits::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn push_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(b: u8, pos: usize) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(Error::Graph6(format!(
            "byte {b} at offset {pos} outside 63..=126"
        )));
    }
    Ok(b - 63)
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes[0], 0)? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let mut n = 0usize;
        for (k, &b) in bytes[2..8].iter().enumerate() {
            n = (n << 6) | sextet(b, 2 + k)? as usize;
        }
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | sextet(b, 1 + k)? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6(format!(
            "length {} does not match order {n} (expected {expected})",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = sextet(bytes[pos], pos)?;
                pos += 1;
            }
            if (cur >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
