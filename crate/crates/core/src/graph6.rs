//! graph6 wire format (short header form) and the `"n; i j; i j"` edge-list
//! text format.
//!
//! graph6 layout: byte 0 is `n + 63`; the upper triangle of the adjacency
//! matrix follows in column-major order (`a(0,1), a(0,2), a(1,2), ...`),
//! packed big-endian into 6-bit groups, each group emitted as `value + 63`.
//! Trailing pad bits must be zero.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

fn g6_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, message: message.into() }
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty line"));
    }
    if bytes[0] == b'~' {
        return Err(g6_err(0, "long header form (n > 62) not supported"));
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(g6_err(0, format!("invalid header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(g6_err(0, format!("vertex count {n} outside supported range 1..={MAX_VERTICES}")));
    }
    let nbits = n * (n - 1) / 2;
    let ngroups = nbits.div_ceil(6);
    if bytes.len() < 1 + ngroups {
        return Err(g6_err(bytes.len(), format!("truncated: expected {} bytes, got {}", 1 + ngroups, bytes.len())));
    }
    if bytes.len() > 1 + ngroups {
        return Err(g6_err(1 + ngroups, format!("trailing data: expected {} bytes, got {}", 1 + ngroups, bytes.len())));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6];
            if !(63..=126).contains(&byte) {
                return Err(g6_err(1 + k / 6, format!("invalid data byte {byte}")));
            }
            let group = byte - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    // Pad bits after the triangle must be zero.
    if nbits % 6 != 0 {
        let last = bytes[ngroups] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(ngroups, "trailing bits nonzero"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let ngroups = nbits.div_ceil(6);
    let mut out = Vec::with_capacity(1 + ngroups);
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses `"n; i j; i j; ..."` with 1-based vertex labels. Duplicate edges
/// are tolerated; a trailing semicolon is allowed.
pub fn parse_edge_list(line: &str) -> Result<Graph, GraphError> {
    let mut parts = line.split(';');
    let head = parts.next().unwrap_or("").trim();
    let n: usize = head
        .parse()
        .map_err(|_| GraphError::EdgeList(format!("bad vertex count {head:?}")))?;
    let mut g = Graph::new(n)?;
    for part in parts {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let mut it = part.split_whitespace();
        let (a, b) = (it.next(), it.next());
        if it.next().is_some() {
            return Err(GraphError::EdgeList(format!("expected two endpoints in {part:?}")));
        }
        let (Some(a), Some(b)) = (a, b) else {
            return Err(GraphError::EdgeList(format!("expected two endpoints in {part:?}")));
        };
        let parse = |t: &str| -> Result<usize, GraphError> {
            let v: usize = t
                .parse()
                .map_err(|_| GraphError::EdgeList(format!("bad vertex label {t:?}")))?;
            if v == 0 || v > n {
                return Err(GraphError::EdgeList(format!("vertex label {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        g.add_edge(parse(a)?, parse(b)?)?;
    }
    Ok(g)
}

/// Accepts both supported text forms: anything containing `;` is an edge
/// list, otherwise graph6. (The graph6 alphabet is ASCII 63..=126, so the two
/// never collide.)
pub fn parse_graph_auto(line: &str) -> Result<Graph, GraphError> {
    if line.contains(';') {
        parse_edge_list(line)
    } else {
        parse_graph6(line)
    }
}
