// SPDX-License-Identifier: Apache-2.0

//! graph6 records (short form, n <= 62).
//!
//! The header byte is `n + 63`; the upper triangle of the adjacency matrix
//! follows column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte, most significant bit first, each byte offset by 63.

use super::Graph;
use crate::error::{Graph6Error, Result};

const OPTIONAL_HEADER: &str = ">>graph6<<";
const MAX_SHORT_N: usize = 62;

/// Decodes one graph6 record. Trailing line terminators are ignored.
/// Edge ids are assigned in lexicographic `(u, v)` order.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let record = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match record.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, record.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange { offset: skip + i, byte: b }.into());
        }
    }
    if body[0] == 126 {
        let n = if body.len() >= 4 && body[1] != 126 {
            body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
        } else {
            usize::MAX
        };
        return Err(Graph6Error::UnsupportedHeader { offset: skip, n }.into());
    }
    let n = (body[0] - 63) as usize;
    debug_assert!(n <= MAX_SHORT_N);
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated { offset: skip + body.len(), expected, found: data.len() }.into());
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes { offset: skip + 1 + expected, extra: data.len() - expected }.into());
    }
    if !bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: skip + expected }.into());
        }
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 record without a trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_SHORT_N, "graph6 short form holds at most 62 vertices");
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a multi-record file: one record per line, blank lines and lines
/// starting with `#` skipped. Each entry carries its 1-based line number.
pub fn read_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, line)| (i + 1, parse_graph6(line.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn smallest_nontrivial_record() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn five_vertex_star_record() {
        // "D?{": bit field 000000 111100 -> x(0,4), x(1,4), x(2,4), x(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn cycle_record_from_independent_encoder() {
        // "Dhc" is C_5 (0-1-2-3-4-0) as written by networkx.
        let g = parse_graph6("Dhc\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert_eq!(encode_graph6(&g), "Dhc");
    }

    #[test]
    fn known_encodings() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode_graph6(&k4), "C~");
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&p5), "DhC");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn optional_header_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &str| match parse_graph6(s) {
            Err(Error::Graph6(e)) => e,
            other => panic!("expected graph6 error, got {other:?}"),
        };
        assert_eq!(err(""), Graph6Error::Empty);
        assert_eq!(err("D?\x20"), Graph6Error::OutOfRange { offset: 2, byte: 0x20 });
        assert_eq!(err("D?"), Graph6Error::Truncated { offset: 2, expected: 2, found: 1 });
        assert_eq!(err("A_?"), Graph6Error::TrailingBytes { offset: 2, extra: 1 });
        assert_eq!(err("A`"), Graph6Error::NonZeroPadding { offset: 1 });
        assert!(matches!(err("~??~"), Graph6Error::UnsupportedHeader { offset: 0, .. }));
        assert_eq!(err(">>graph6<<D?"), Graph6Error::Truncated { offset: 12, expected: 2, found: 1 });
    }

    #[test]
    fn multi_record_reader_skips_comments() {
        let text = "# header\nA_\n\nBw\n#x\n";
        let recs = read_graph6_lines(text);
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].0, 2);
        assert_eq!(recs[1].0, 4);
        assert_eq!(recs[1].1.as_ref().unwrap().m(), 3);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=16).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_encode(g in arb_graph()) {
            let back = parse_graph6(&encode_graph6(&g)).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
