//! graph6 encoding and decoding, plus the plain edge-list text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) into 6-bit groups, each stored
//! as a printable byte value + 63. The leading byte is n + 63; only the
//! single-byte size form (n <= 62) is supported here. The optional
//! `>>graph6<<` header is tolerated and stripped.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decodes a graph6 string into a connected graph.
///
/// # Errors
///
/// [`Error::Graph6`] with the byte offset for malformed input (bad length,
/// out-of-range bytes, nonzero padding, n = 0), [`Error::Unsupported`] for
/// the multi-byte size forms (n > 62), and [`Error::Disconnected`] when the
/// encoded graph is not connected.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            pos: 0,
            reason: "empty string".into(),
        });
    }
    if bytes[0] == 126 {
        return Err(Error::Unsupported(
            "multi-byte graph6 size (n > 62) is not supported; use an edge list".into(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::Graph6 {
            pos: 0,
            reason: format!("size byte {} outside 63..=125", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6 {
            pos: 0,
            reason: "graph must have at least one vertex".into(),
        });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::Graph6 {
            pos: bytes.len().min(1 + nbytes),
            reason: format!(
                "expected {} data bytes for n = {}, found {}",
                nbytes,
                n,
                bytes.len() - 1
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Column-major upper triangle: columns j = 1..n, rows i = 0..j.
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6 {
                    pos: 1 + bit / 6,
                    reason: format!("data byte {byte} outside 63..=126"),
                });
            }
            let group = byte - 63;
            if group & (1 << (5 - bit % 6)) != 0 {
                edges.push((i + 1, j + 1));
            }
            bit += 1;
        }
    }
    // Trailing pad bits of the last group must be zero.
    if nbits % 6 != 0 {
        let last = bytes[1 + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6 {
                pos: nbytes,
                reason: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph (n <= 62) as graph6, without the optional header.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Unsupported(format!(
            "graph6 single-byte size form requires n <= 62, got {n}"
        )));
    }
    let nbits = n * (n - 1) / 2;
    let mut out = vec![63 + n as u8];
    out.resize(1 + nbits.div_ceil(6), 63u8);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(i + 1, j + 1) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable"))
}

/// Parses the edge-list text format: first non-comment line `n`, then one
/// `u v` pair per line, 1-based. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines
        .next()
        .ok_or_else(|| Error::Input("empty edge-list input".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Input(format!("expected vertex count on first line, got {first:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(Error::Input(format!("expected `u v` pair, got {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| Error::Input(format!("bad vertex label {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::Input(format!("bad vertex label {v:?}")))?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Parses either format, deciding by the first non-comment line: a bare
/// integer means edge list, anything else graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::Input("empty graph input".into()))?;
    if first.parse::<usize>().is_ok() {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}
