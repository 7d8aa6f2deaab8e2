//! Text encodings for graphs: graph6 and a plain edge list.
//!
//! Edge-list format: the vertex count on the first non-blank line, then one
//! `u v` pair per line, 0-indexed. Lines starting with `#` are comments.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes a graph6 string (an optional `>>graph6<<` header is accepted).
/// Errors carry the byte offset into `text`.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end();
    let mut bytes = trimmed.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, header) = match bytes {
        [] => return Err(parse_err(base, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(base + 2 + rest.len(), "truncated vertex count"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(base + 1 + rest.len(), "truncated vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, 4)
        }
        [b, ..] => (usize::from(b - 63), 1),
    };
    let body = &bytes[header..];
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() != bytes_needed {
        let offset = base + header + body.len().min(bytes_needed);
        return Err(parse_err(
            offset,
            format!("expected {bytes_needed} data bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.try_add_edge(i, j)?;
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if bits_needed % 6 != 0 {
        let last = body[bytes_needed - 1] - 63;
        let pad = 6 - bits_needed % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + header + bytes_needed - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        let here = offset + (line.len() - line.trim_start().len());
        offset += line.len();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut fields = body.split_whitespace();
        match graph.as_mut() {
            None => {
                let n: usize = body
                    .parse()
                    .map_err(|_| parse_err(here, format!("expected vertex count, found `{body}`")))?;
                graph = Some(Graph::empty(n));
            }
            Some(g) => {
                let mut endpoint = || -> Result<usize> {
                    let tok = fields
                        .next()
                        .ok_or_else(|| parse_err(here, format!("expected `u v`, found `{body}`")))?;
                    tok.parse()
                        .map_err(|_| parse_err(here, format!("bad vertex `{tok}`")))
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if fields.next().is_some() {
                    return Err(parse_err(here, format!("trailing tokens in `{body}`")));
                }
                g.try_add_edge(u, v).map_err(|e| parse_err(here, format!("{e}")))?;
            }
        }
    }
    graph.ok_or_else(|| parse_err(0, "missing vertex count"))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
