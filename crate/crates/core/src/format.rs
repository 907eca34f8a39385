//! The `.ecg` text format.
//!
//! ```text
//! ecg 1
//! <n> <m>
//! <u> <v> <color>     (m lines, 0-based ids, u < v, sorted by (u, v))
//! ```
//!
//! All numbers are ASCII decimal without leading zeros, fields are separated
//! by single spaces and every line ends with `\n`. The parser rejects any
//! deviation with a line-numbered error, so `parse(serialize(g)) == g` and
//! `serialize(parse(s)) == s` hold bit-exactly.

use crate::graph::{EdgeColoredGraph, GraphError};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Strict decimal parse: digits only, no sign, no leading zeros.
fn parse_uint(tok: &str, line: usize) -> Result<u64, FormatError> {
    if tok.is_empty() {
        return Err(syntax(line, "empty numeric field"));
    }
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("invalid number `{tok}`")));
    }
    if tok.len() > 1 && tok.starts_with('0') {
        return Err(syntax(line, format!("leading zeros in `{tok}`")));
    }
    tok.parse::<u64>()
        .map_err(|_| syntax(line, format!("number `{tok}` out of range")))
}

fn split_fields<'a, const K: usize>(
    text: &'a str,
    line: usize,
    what: &str,
) -> Result<[&'a str; K], FormatError> {
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != K || fields.iter().any(|f| f.is_empty()) {
        return Err(syntax(
            line,
            format!("expected `{what}` separated by single spaces, got `{text}`"),
        ));
    }
    Ok(std::array::from_fn(|i| fields[i]))
}

/// Parses a complete `.ecg` document.
pub fn parse_ecg(input: &str) -> Result<EdgeColoredGraph, FormatError> {
    let mut lines = Vec::new();
    let mut rest = input;
    while let Some(pos) = rest.find('\n') {
        lines.push(&rest[..pos]);
        rest = &rest[pos + 1..];
    }
    if !rest.is_empty() {
        return Err(syntax(lines.len() + 1, "final line is not `\\n`-terminated"));
    }

    if lines.is_empty() {
        return Err(syntax(1, "empty input, expected header `ecg 1`"));
    }
    if lines[0] != "ecg 1" {
        return Err(syntax(1, format!("expected header `ecg 1`, got `{}`", lines[0])));
    }
    if lines.len() < 2 {
        return Err(syntax(2, "missing `<n> <m>` line"));
    }
    for (i, l) in lines.iter().enumerate() {
        if l.contains('\r') {
            return Err(syntax(i + 1, "carriage return not allowed"));
        }
    }

    let [n_tok, m_tok] = split_fields::<2>(lines[1], 2, "<n> <m>")?;
    let n = parse_uint(n_tok, 2)?;
    let m = parse_uint(m_tok, 2)?;
    if n > u32::MAX as u64 {
        return Err(syntax(2, format!("vertex count {n} too large")));
    }
    let n = n as usize;

    let expected_lines = 2 + m as usize;
    if lines.len() != expected_lines {
        let line = expected_lines.min(lines.len()) + 1;
        return Err(syntax(
            line,
            format!("expected {m} edge lines, found {}", lines.len() - 2),
        ));
    }

    let mut edges = Vec::with_capacity(m as usize);
    let mut prev: Option<(u32, u32)> = None;
    for (idx, text) in lines[2..].iter().enumerate() {
        let line = idx + 3;
        let [u_tok, v_tok, c_tok] = split_fields::<3>(text, line, "<u> <v> <color>")?;
        let u = parse_uint(u_tok, line)?;
        let v = parse_uint(v_tok, line)?;
        let c = parse_uint(c_tok, line)?;
        if u >= n as u64 || v >= n as u64 {
            return Err(syntax(line, format!("vertex out of range on edge ({u}, {v})")));
        }
        if c > u32::MAX as u64 {
            return Err(syntax(line, format!("color {c} out of range")));
        }
        let (u, v, c) = (u as u32, v as u32, c as u32);
        if u >= v {
            return Err(syntax(line, format!("edge ({u}, {v}) must satisfy u < v")));
        }
        if let Some(p) = prev {
            if p >= (u, v) {
                return Err(syntax(
                    line,
                    format!("edges must be strictly sorted by (u, v); ({u}, {v}) after ({}, {})", p.0, p.1),
                ));
            }
        }
        prev = Some((u, v));
        edges.push((u, v, c));
    }

    EdgeColoredGraph::build(n, edges).map_err(|source| FormatError::Graph { line: 3, source })
}

/// Serializes to the canonical `.ecg` text.
pub fn to_ecg_string(g: &EdgeColoredGraph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 12);
    out.push_str("ecg 1\n");
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v, c) in g.edges() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    out
}

pub fn read_ecg_file(path: impl AsRef<Path>) -> Result<EdgeColoredGraph, FormatError> {
    let text = std::fs::read_to_string(path)?;
    parse_ecg(&text)
}

pub fn write_ecg_file(path: impl AsRef<Path>, g: &EdgeColoredGraph) -> Result<(), FormatError> {
    Ok(std::fs::write(path, to_ecg_string(g))?)
}
