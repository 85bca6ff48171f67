//! Text formats for graphs: a plain edge list and graph6.
//!
//! Edge list: the first data line is `n <vertex count>`, then one `u v` pair
//! per line, 0-based. Blank lines and lines starting with `#` are ignored.
//!
//! graph6: the printable-ASCII encoding of the upper-triangle adjacency bits
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte with
//! 63 added; the leading byte is `63 + n`, limiting graphs to 62 vertices.

use spectral_kit_core::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("edge list must start with 'n <count>', got {0:?}")]
    MissingHeader(String),
    #[error("cannot parse edge line {0:?}")]
    BadEdgeLine(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge list declares a self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 only supports 1 <= n <= 62, got {0}")]
    UnsupportedOrder(usize),
    #[error("multi-byte graph6 orders (n > 62) are not supported")]
    MultiByteOrder,
    #[error("invalid graph6 byte {byte:#x} at position {pos}")]
    BadGraph6Byte { byte: u8, pos: usize },
    #[error("graph6 string has {got} payload bytes, expected {expected}")]
    BadGraph6Length { got: usize, expected: usize },
}

/// Which text form a graph travels in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl std::fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphFormat::EdgeList => write!(f, "edgelist"),
            GraphFormat::Graph6 => write!(f, "graph6"),
        }
    }
}

/// Serializes a graph in the requested format. Edge lists come out in
/// canonical order (header, then sorted pairs), so parse/serialize round
/// trips are stable.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String, FormatError> {
    match format {
        GraphFormat::EdgeList => Ok(write_edge_list(g)),
        GraphFormat::Graph6 => write_graph6(g),
    }
}

/// Parses either format, deciding by shape: an edge list starts with an `n`
/// header (comments aside), anything else is treated as graph6.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(FormatError::Empty)?;
    if first == "n" || first.starts_with("n ") || first.starts_with("n\t") {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = header
        .strip_prefix('n')
        .map(str::trim)
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| FormatError::MissingHeader(header.to_string()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u = a.parse().map_err(|_| FormatError::BadEdgeLine(line.into()))?;
                let v = b.parse().map_err(|_| FormatError::BadEdgeLine(line.into()))?;
                (u, v)
            }
            _ => return Err(FormatError::BadEdgeLine(line.into())),
        };
        edges.push((u, v));
    }
    graph_from_edges(n, &edges)
}

fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, FormatError> {
    for &(u, v) in edges {
        if u == v {
            return Err(FormatError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= n {
                return Err(FormatError::VertexOutOfRange { vertex: w, n });
            }
        }
    }
    if n == 0 {
        return Err(FormatError::UnsupportedOrder(0));
    }
    Ok(Graph::new(n, edges).expect("edges validated"))
}

pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n == 0 || n > 62 {
        return Err(FormatError::UnsupportedOrder(n));
    }
    let mut bytes = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.trim().trim_start_matches(">>graph6<<");
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let header = bytes[0];
    if header == 126 {
        return Err(FormatError::MultiByteOrder);
    }
    if !(63..126).contains(&header) {
        return Err(FormatError::BadGraph6Byte {
            byte: header,
            pos: 0,
        });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(FormatError::UnsupportedOrder(0));
    }
    let pair_bits = n * (n - 1) / 2;
    let expected = pair_bits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() != expected {
        return Err(FormatError::BadGraph6Length {
            got: payload.len(),
            expected,
        });
    }
    let mut bits = Vec::with_capacity(pair_bits);
    for (pos, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadGraph6Byte { byte: b, pos: pos + 1 });
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_encodes_to_the_classic_string() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        let back = parse_graph6("C~").unwrap();
        assert_eq!(back, k4);
    }

    #[test]
    fn edge_list_round_trip_is_identity_on_canonical_form() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(write_edge_list(&parsed), text);
    }

    #[test]
    fn edge_list_accepts_comments_and_blanks() {
        let text = "# a graph\n\nn 3\n0 1\n# middle\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_header_is_required() {
        assert!(matches!(
            parse_edge_list("0 1\n"),
            Err(FormatError::MissingHeader(_))
        ));
        assert_eq!(parse_edge_list(""), Err(FormatError::Empty));
    }

    #[test]
    fn edge_list_validates_vertices() {
        assert_eq!(
            parse_edge_list("n 3\n0 5\n"),
            Err(FormatError::VertexOutOfRange { vertex: 5, n: 3 })
        );
        assert_eq!(parse_edge_list("n 3\n1 1\n"), Err(FormatError::SelfLoop(1)));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2\n"),
            Err(FormatError::BadEdgeLine(_))
        ));
    }

    #[test]
    fn graph6_round_trip_on_assorted_graphs() {
        for edges in [
            vec![],
            vec![(0usize, 1usize)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)],
        ] {
            let n = 7;
            let g = Graph::new(n, &edges).unwrap();
            let s = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_oversized_and_malformed() {
        let big = Graph::empty(63).unwrap();
        assert_eq!(write_graph6(&big), Err(FormatError::UnsupportedOrder(63)));
        assert!(matches!(
            parse_graph6("C!"),
            Err(FormatError::BadGraph6Byte { .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(FormatError::BadGraph6Length { .. })
        ));
    }

    #[test]
    fn parse_graph_detects_format() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(parse_graph("C~").unwrap(), k4);
        assert_eq!(parse_graph(&write_edge_list(&k4)).unwrap(), k4);
        assert_eq!(parse_graph(">>graph6<<C~").unwrap(), k4);
    }
}
