//! graph6 and plain edge-list text formats.

use std::fmt::Write;

use super::graph::Graph;
use crate::{Error, Result};

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Encodes `g` in graph6 (upper triangle, column-major, 6 bits per byte).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((63 + (acc << (6 - k))) as char);
    }
    out
}

/// Decodes one graph6 string; surrounding whitespace and a `>>graph6<<` header are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        body = rest;
        base += ">>graph6<<".len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(
                base + i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let value = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| g6_err(base + i, "truncated vertex count"))
    };
    let (n, start) = match bytes.first() {
        None => return Err(g6_err(base, "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | value(i)?;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0;
            for i in 1..4 {
                n = n << 6 | value(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    let expected = start + bits_needed.div_ceil(6);
    if bytes.len() != expected {
        return Err(g6_err(
            base + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for n = {n}, found {}",
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(g6_err(base + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Writes the edge-list format: a header `n m` then one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing \"n m\" header"))?;
    let (n, m) = pair(hline, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, text) in lines {
        let (u, v) = pair(line, text)?;
        if u >= n || v >= n || u == v {
            return Err(Error::parse(
                line,
                format!("invalid edge \"{u} {v}\" for n = {n}"),
            ));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("\"{tok}\" is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(line, "trailing tokens"));
    }
    Ok((a, b))
}

/// Reads a graph file, choosing the format by content: a single token is graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.starts_with(">>graph6<<")
        || (!trimmed.is_empty() && !trimmed.contains(char::is_whitespace))
    {
        decode_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}
