//! graph6 encoding as produced by nauty's `geng` and friends.
//!
//! Order header, then the upper triangle of the adjacency matrix in column
//! order `(0,1),(0,2),(1,2),(0,3),...`, packed six bits per byte, big-endian
//! within each group, each byte offset by 63. Only orders up to 64 are
//! accepted.

use crate::error::Graph6Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. A single trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Truncated)?;
    if !(OFFSET..=126).contains(&first) {
        return Err(Graph6Error::BadHeader(first));
    }
    let (n, mut pos) = if first < 126 {
        ((first - OFFSET) as u64, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated);
        }
        if bytes[1] == 126 {
            // 8-byte header form; only used for n >= 258048
            return Err(Graph6Error::TooLarge(258_048));
        }
        let mut n = 0u64;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Graph6Error::BadByte { byte: b, offset: k + 1 });
            }
            n = n << 6 | (b - OFFSET) as u64;
        }
        (n, 4)
    };
    if n > 64 {
        return Err(Graph6Error::TooLarge(n));
    }
    if n == 0 {
        return Err(Graph6Error::BadHeader(first));
    }
    let n = n as usize;
    let need = payload_len(n);
    let payload = &bytes[pos..];
    if payload.len() < need {
        return Err(Graph6Error::Truncated);
    }
    if payload.len() > need {
        return Err(Graph6Error::TrailingGarbage(payload.len() - need));
    }

    let mut adj = vec![0u64; n];
    let total_bits = n * (n - 1) / 2;
    let mut bit = 0usize;
    let mut byte_val = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                let b = bytes[pos];
                if !(OFFSET..=126).contains(&b) {
                    return Err(Graph6Error::BadByte { byte: b, offset: pos });
                }
                byte_val = b - OFFSET;
                pos += 1;
            }
            if byte_val >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let pad = (6 - total_bits % 6) % 6;
    if pad > 0 && byte_val & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&write_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        // vertex 4 joined to everything else
        assert_eq!(g, Graph::from_edge_list(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap());
        assert_eq!(write_graph6(&g), "D?{");

        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(write_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()), "C~");
        // edges a-c, a-e, b-d, d-e
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn large_header() {
        for n in [62, 63, 64] {
            let g = Graph::cycle(n).unwrap();
            let s = write_graph6(&g);
            if n >= 63 {
                assert_eq!(s.as_bytes()[0], 126);
            }
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Truncated));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Truncated));
        assert_eq!(parse_graph6("D?{?"), Err(Graph6Error::TrailingGarbage(1)));
        assert_eq!(parse_graph6(" ?"), Err(Graph6Error::BadHeader(b' ')));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::BadHeader(b'?')));
        assert!(matches!(parse_graph6("D?\x10"), Err(Graph6Error::BadByte { .. })));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(parse_graph6("~?@@"), Err(Graph6Error::TooLarge(65))));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::Truncated));
    }

    #[test]
    fn trailing_newline_tolerated() {
        assert_eq!(parse_graph6("D?{\n").unwrap(), parse_graph6("D?{").unwrap());
        assert_eq!(parse_graph6("D?{\r\n").unwrap(), parse_graph6("D?{").unwrap());
    }
}
