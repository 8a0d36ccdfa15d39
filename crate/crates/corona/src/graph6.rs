//! graph6 encoding and decoding, bit-exact per the de-facto standard:
//! a size header (6-bit characters offset by 63) followed by the upper
//! triangle of the adjacency matrix packed column by column.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { offset, msg: msg.into() }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // 63 <= n <= 258047: '~' then three 6-bit groups
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let bits = g.upper_triangle_bits();
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - i);
            }
        }
        bytes.push(v + 63);
    }
    String::from_utf8(bytes).unwrap()
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    // optional ">>graph6<<" prefix used by some tools
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(i, format!("byte {:#04x} outside graph6 range", b)));
        }
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err(1, "graphs beyond 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), "truncated length header"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(g6_err(0, "graph6 string encodes an empty graph"));
    }
    if n > MAX_VERTICES {
        return Err(g6_err(0, format!("{} vertices exceeds the supported maximum", n)));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(g6_err(bytes.len(), "truncated adjacency bits"));
    }
    if bytes.len() > pos + nbytes {
        return Err(g6_err(pos + nbytes, "trailing garbage after adjacency bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    for b in bit..nbytes * 6 {
        let byte = bytes[pos + b / 6] - 63;
        if byte >> (5 - b % 6) & 1 == 1 {
            return Err(g6_err(pos + b / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    #[test]
    fn single_vertex() {
        let k1 = complete(1).unwrap();
        assert_eq!(emit_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);
    }

    #[test]
    fn known_strings() {
        // reference strings from an independent graph6 implementation
        assert_eq!(emit_graph6(&cycle(4).unwrap()), "Cl");
        assert_eq!(emit_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(emit_graph6(&path(4).unwrap()), "Ch");
        assert_eq!(emit_graph6(&star(5).unwrap()), "Ds_");
    }

    #[test]
    fn round_trips() {
        for g in [path(7).unwrap(), cycle(5).unwrap(), star(6).unwrap(), complete(8).unwrap()] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form_round_trip() {
        let g = path(70).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("").is_err());
        // truncated adjacency section for a 5-vertex graph
        assert!(parse_graph6("D").is_err());
        // trailing garbage
        assert!(parse_graph6("Cl?").is_err());
        // non-printable byte
        assert!(parse_graph6("C\x01").is_err());
        // n = 0
        assert!(parse_graph6("?").is_err());
    }

    #[test]
    fn error_offsets() {
        match parse_graph6("Cl?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected trailing-garbage error, got {:?}", other),
        }
    }
}
