//! Graph I/O: graph6, adjacency-list text, and DOT (emit only).

use std::fmt;
use std::str::FromStr;

use locolor_core::{Graph, VertexSet};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    /// First line `n`, then one `u v` line per edge, `#` comments.
    Adjacency,
    Dot,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Adjacency => "adjacency",
            Format::Dot => "dot",
        })
    }
}

impl FromStr for Format {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "adjacency" | "adj" | "text" | "edges" => Ok(Format::Adjacency),
            "dot" => Ok(Format::Dot),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },
    #[error("byte {offset}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { offset: usize, vertex: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] locolor_core::Error),
    #[error("{0} is an output-only format")]
    EmitOnly(Format),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
}

fn malformed(offset: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph(input: &[u8], format: Format) -> Result<Graph, FormatError> {
    match format {
        Format::Graph6 => parse_graph6(input),
        Format::Adjacency => parse_adjacency(input),
        Format::Dot => Err(FormatError::EmitOnly(Format::Dot)),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => emit_graph6(g),
        Format::Adjacency => emit_adjacency(g),
        Format::Dot => emit_dot(g, "G"),
    }
}

/// Adjacency text starts with a digit or a comment; graph6 bytes never do.
pub fn sniff(input: &[u8]) -> Format {
    match input.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b) if b.is_ascii_digit() || *b == b'#' => Format::Adjacency,
        _ => Format::Graph6,
    }
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let (mut acc, mut bits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                (acc, bits) = (0, 0);
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(input: &[u8]) -> Result<Graph, FormatError> {
    let mut start = 0;
    if input.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let mut end = input.len();
    if input[start..end].ends_with(b"\n") {
        end -= 1;
        if input[start..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    let body = &input[start..end];
    if let Some(i) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(start + i, format!("byte {:#04x} outside the graph6 range", body[i])));
    }
    if body.is_empty() {
        return Err(malformed(start, "missing vertex count"));
    }
    let digits = |from: usize, count: usize| -> Result<usize, FormatError> {
        if body.len() < from + count {
            return Err(malformed(start + body.len(), "truncated vertex count"));
        }
        Ok(body[from..from + count].iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, header_len) = match body {
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
        [] => unreachable!(),
    };
    let limit = locolor_core::graph::vertex_limit();
    if n > limit {
        return Err(locolor_core::Error::TooManyVertices { n, limit }.into());
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = header_len + pairs.div_ceil(6);
    if body.len() != expected {
        let at = start + body.len().min(expected);
        return Err(malformed(at, format!("expected {expected} bytes for {n} vertices, found {}", body.len())));
    }
    let data = &body[header_len..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if pairs % 6 != 0 {
        let last = data.len() - 1;
        if (data[last] - 63) & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(malformed(start + header_len + last, "nonzero padding bits"));
        }
    }
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(rows)?)
}

pub fn emit_adjacency(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Tokens of one line with their byte offsets, comments removed.
fn line_tokens(line: &str, base: usize) -> Vec<(usize, &str)> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut rest = code;
    let mut pos = base;
    while let Some(i) = rest.find(|c: char| !c.is_whitespace()) {
        rest = &rest[i..];
        pos += i;
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        out.push((pos, &rest[..len]));
        rest = &rest[len..];
        pos += len;
    }
    out
}

fn number(offset: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| malformed(offset, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_adjacency(input: &[u8]) -> Result<Graph, FormatError> {
    let text = std::str::from_utf8(input).map_err(|e| malformed(e.valid_up_to(), "invalid UTF-8"))?;
    let mut n = None;
    let mut edges = Vec::new();
    let mut base = 0;
    for line in text.split_inclusive('\n') {
        let toks = line_tokens(line, base);
        base += line.len();
        match (n, toks.as_slice()) {
            (_, []) => {}
            (None, [(off, tok)]) => {
                let count = number(*off, tok)?;
                let limit = locolor_core::graph::vertex_limit();
                if count > limit {
                    return Err(locolor_core::Error::TooManyVertices { n: count, limit }.into());
                }
                n = Some(count);
            }
            (None, [_, (off, _), ..]) => return Err(malformed(*off, "first line must hold only the vertex count")),
            (Some(count), [(ou, u), (ov, v)]) => {
                let (u, v) = (number(*ou, u)?, number(*ov, v)?);
                for (off, x) in [(*ou, u), (*ov, v)] {
                    if x >= count {
                        return Err(FormatError::VertexOutOfRange { offset: off, vertex: x, n: count });
                    }
                }
                if u == v {
                    return Err(malformed(*ou, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            (Some(_), toks) => {
                let off = toks.get(2).map_or(toks[0].0, |t| t.0);
                return Err(malformed(off, "edge lines hold exactly two vertices"));
            }
        }
    }
    let n = n.ok_or_else(|| malformed(text.len(), "missing vertex count"))?;
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_dot(g: &Graph, name: &str) -> String {
    let id: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    let mut out = format!("graph {id} {{\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&k3), "Bw");
        assert_eq!(parse_graph6(b">>graph6<<Bw\n").unwrap(), k3);
    }

    #[test]
    fn adjacency_path() {
        let p = parse_adjacency(b"3\n0 1\n1 2\n").unwrap();
        assert_eq!(p, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(emit_adjacency(&p), "3\n0 1\n1 2\n");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_adjacency(b"3\n0 1\n1 3\n"),
            Err(FormatError::VertexOutOfRange { offset: 8, vertex: 3, n: 3 })
        );
        assert!(matches!(parse_graph6(b"B w"), Err(FormatError::Malformed { offset: 1, .. })));
        assert!(matches!(parse_graph6(b"Bx"), Err(FormatError::Malformed { offset: 1, .. })));
        assert!(matches!(parse_graph6(b"C"), Err(FormatError::Malformed { .. })));
        assert!(matches!(parse_adjacency(b"# c\n3 4\n"), Err(FormatError::Malformed { offset: 6, .. })));
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff(b"  # comment\n3\n"), Format::Adjacency);
        assert_eq!(sniff(b"Bw\n"), Format::Graph6);
        assert_eq!(sniff(b">>graph6<<Bw"), Format::Graph6);
    }
}
