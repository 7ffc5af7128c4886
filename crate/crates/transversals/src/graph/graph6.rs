//! Bit-exact graph6 encoding and decoding.
//!
//! The format packs the upper adjacency triangle in column-major order
//! (pairs (0,1), (0,2), (1,2), (0,3), ...) into 6-bit chunks offset by 63,
//! preceded by the vertex count: one byte `n + 63` for `n <= 62`, or `~`
//! followed by three 6-bit bytes for larger `n`. One graph per line,
//! LF-terminated, in files.

use crate::graph::{Graph, MAX_VERTICES};
use crate::{Error, Result};
use std::io::{BufRead, Write};
use std::path::Path;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6Parse {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line (without the trailing newline).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }

    let (n, data_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(parse_err(1, "8-byte vertex counts exceed the 64-vertex limit"));
        }
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated 4-byte vertex count"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    if n > MAX_VERTICES {
        return Err(parse_err(0, format!("vertex count {n} exceeds the 64-vertex limit")));
    }

    let pair_bits = n * n.saturating_sub(1) / 2;
    let data_len = pair_bits.div_ceil(6);
    let expected = data_start + data_len;
    if bytes.len() < expected {
        return Err(parse_err(
            bytes.len(),
            format!("truncated adjacency data: expected {expected} bytes"),
        ));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, "trailing garbage after adjacency data"));
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[data_start + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            bit_index += 1;
            if bit_index == pair_bits {
                break 'outer;
            }
        }
    }
    // padding bits of the final chunk must be zero
    while bit_index < data_len * 6 {
        let byte = bytes[data_start + bit_index / 6] - 63;
        if (byte >> (5 - bit_index % 6)) & 1 != 0 {
            return Err(parse_err(
                data_start + bit_index / 6,
                "non-zero padding bit",
            ));
        }
        bit_index += 1;
    }

    Graph::from_adj(adj)
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.has_edge(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads a file with one graph6 line per graph. Blank lines are rejected
/// (they are malformed encodings); errors carry the file path and line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let reader = std::io::BufReader::new(file);
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path.display().to_string(), e))?;
        let trimmed = line.trim_end_matches('\r');
        from_graph6(trimmed).map_err(|e| match e {
            Error::Graph6Parse { offset, reason } => Error::Graph6Parse {
                offset,
                reason: format!("{}:{}: {reason}", path.display(), lineno + 1),
            },
            other => other,
        })
        .map(|g| graphs.push(g))?;
    }
    Ok(graphs)
}

/// Writes one graph6 line per graph, LF-terminated.
pub fn write_graph6_file(path: &Path, graphs: &[Graph]) -> Result<()> {
    let mut file =
        std::fs::File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    for g in graphs {
        writeln!(file, "{}", to_graph6(g)).map_err(|e| Error::io(path.display().to_string(), e))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    #[test]
    fn one_vertex_graph() {
        let k1 = build::complete(1).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(from_graph6("@").unwrap(), k1);
    }

    #[test]
    fn two_vertex_graphs_match_reference_codec() {
        // reference values computed by hand from the format definition:
        // n=2 -> 'A'; single pair bit 1 -> 100000 -> 32+63 = 95 = '_',
        // pair bit 0 -> '?'.
        let k2 = build::path(2).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(from_graph6("A_").unwrap(), k2);

        let two_p1 = build::empty_graph(2).unwrap();
        assert_eq!(to_graph6(&two_p1), "A?");
        assert_eq!(from_graph6("A?").unwrap(), two_p1);
    }

    #[test]
    fn five_cycle_reference_value() {
        // hand-packed: pairs (01)(02)(12)(03)(13)(23)(04)(14)(24)(34)
        // = 101001 1001(00) -> 'h', 'c'
        assert_eq!(to_graph6(&build::cycle(5).unwrap()), "Dhc");
        assert_eq!(from_graph6("Dhc").unwrap(), build::cycle(5).unwrap());
    }

    #[test]
    fn long_header_roundtrip() {
        for n in [63, 64] {
            let g = build::path(n).unwrap();
            let enc = to_graph6(&g);
            assert!(enc.starts_with('~'));
            assert_eq!(from_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn errors_name_byte_offsets() {
        // byte outside the printable range
        match from_graph6("B\u{7f}?") {
            Err(Error::Graph6Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        // trailing garbage
        match from_graph6("A_?") {
            Err(Error::Graph6Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        // truncated data
        match from_graph6("D") {
            Err(Error::Graph6Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        // n > 64
        match from_graph6("~?A?") {
            Err(Error::Graph6Parse { reason, .. }) => {
                assert!(reason.contains("64"), "reason: {reason}")
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // non-zero padding
        match from_graph6("A@") {
            Err(Error::Graph6Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(from_graph6("").is_err());
    }
}
