//! The graph6 text encoding.
//!
//! Layout: an order header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte with each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse { offset, msg: msg.into() }
}

fn sextet(bytes: &[u8], i: usize) -> Result<u64> {
    match bytes.get(i) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(parse_err(i, format!("byte 0x{b:02x} outside the graph6 range"))),
        None => Err(parse_err(i, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut s = text.trim_end();
    if let Some(rest) = s.strip_prefix(HEADER) {
        base = HEADER.len();
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut v = 0u64;
        for i in 1..4 {
            v = v << 6 | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if v < 63 {
            return Err(parse_err(base, "long-form order header used for n < 63"));
        }
        (v as usize, 4)
    } else {
        let mut v = 0u64;
        for i in 2..8 {
            v = v << 6 | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if v < 258048 {
            return Err(parse_err(base, "8-byte order header used for n < 258048"));
        }
        (v as usize, 8)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(parse_err(
            base + bytes.len().min(pos + nbytes),
            format!("expected {} adjacency bytes, found {}", nbytes, bytes.len() - pos),
        ));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    let mut cur = 0u64;
    let mut left = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if cur >> left & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if left > 0 && cur & ((1u64 << left) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    Ok(Graph::from_rows(adj))
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, msg } => Error::Parse { offset: offset + base, msg },
        other => other,
    }
}

/// Encodes a graph in canonical graph6 form (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a stream of graph6 lines, skipping blank lines and headers.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        if !body.is_empty() && body != HEADER {
            out.push(parse_graph6(body).map_err(|e| match e {
                Error::Parse { offset: o, msg } => Error::Parse { offset: offset + o, msg },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Reads either a graph6 stream or a single edge list. Edge lists are
/// recognised by a first significant line starting with a digit.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        None => Err(parse_err(0, "no graph in input")),
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => Ok(vec![Graph::parse_edge_list(text)?]),
        Some(_) => parse_graph6_stream(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_decodes() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(emit_graph6(&g), "C~");
    }

    #[test]
    fn five_vertex_roundtrip() {
        // bits 000000 111100: x(0,4), x(1,4), x(2,4), x(3,4) set -> star centred at 4
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn long_form_header() {
        let edges: Vec<_> = (1..64).map(|i| (i - 1, i)).collect();
        let g = Graph::new(64, &edges).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        match parse_graph6("C}") {
            // '}' = 62 -> 111110: fine for n=4 (6 bits exactly)
            Ok(g) => assert_eq!(g.edge_count(), 5),
            Err(e) => panic!("{e}"),
        }
        match parse_graph6("D?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        // n=3 has 3 bits, padding must be zero: '~' sets all six
        match parse_graph6("B~") {
            Err(Error::Parse { offset, msg }) => {
                assert_eq!(offset, 1);
                assert!(msg.contains("padding"));
            }
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x10") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6("?"), Err(Error::InvalidOrder(0))));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn stream_skips_blank_lines() {
        let gs = parse_graph6_stream(">>graph6<<\nC~\n\nD?{\n").unwrap();
        assert_eq!(gs.len(), 2);
        match parse_graph6_stream("C~\nD?\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
    }
}
