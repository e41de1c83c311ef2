//! Bit-exact graph6 reading and writing, interoperable with the nauty
//! toolchain and House of Graphs downloads.
//!
//! The format: a size field N(n), then the upper triangle x(i,j) for j from 1
//! to n-1 and i from 0 to j-1, most significant bit first, zero-padded to
//! 6-bit groups, each group + 63 emitted as one printable byte. The 1-byte
//! (n <= 62) and 4-byte (n <= 258047) size encodings are supported; the
//! 8-byte form is rejected.

use crate::graph::Graph;
use std::io::BufRead;
use thiserror::Error;

/// Optional per-file header emitted by some nauty tools.
pub const HEADER: &str = ">>graph6<<";

const MAX_LONG_ORDER: usize = 258_047;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside printable range 63..=126")]
    ByteOutOfRange { byte: u8, pos: usize },
    #[error("8-byte size encoding (n > {MAX_LONG_ORDER}) is not supported")]
    OrderTooLarge,
    #[error("truncated size field")]
    TruncatedSize,
    #[error("body has {got} bytes, expected {want} for order {n}")]
    BodyLength { n: usize, got: usize, want: usize },
    #[error("nonzero padding bits in final group")]
    DirtyPadding,
}

/// Decode error tagged with a 1-based line number, as produced by [`read_stream`].
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct StreamError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one graph6 line (the `>>graph6<<` header prefix is tolerated).
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_prefix(HEADER).unwrap_or(line).trim_end_matches(['\r', '\n']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, pos });
        }
    }

    // Size field: one byte for n <= 62, '~' + 3 bytes for n <= 258047.
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::OrderTooLarge);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    let want = if n >= 2 { body_len(n) } else { 0 };
    if body.len() != want {
        return Err(Graph6Error::BodyLength {
            n,
            got: body.len(),
            want,
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = (body[bit / 6] - 63) as usize;
            if group >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    // Everything after the triangle must be zero padding.
    let total_bits = body.len() * 6;
    while bit < total_bits {
        if (body[bit / 6] - 63) >> (5 - bit % 6) & 1 == 1 {
            return Err(Graph6Error::DirtyPadding);
        }
        bit += 1;
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
///
/// `parse_graph6(write_graph6(g))` reproduces `g` with identical labels.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_LONG_ORDER, "graph6 writer supports n <= {MAX_LONG_ORDER}");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
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
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

/// Lazily decodes newline-delimited graph6 from a reader. Blank lines and a
/// leading `>>graph6<<` header line are skipped; errors carry line numbers.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, StreamError>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| {
            let line_no = idx + 1;
            let text = match line {
                Ok(text) => text,
                Err(_) => {
                    return Some(Err(StreamError {
                        line: line_no,
                        source: Graph6Error::Empty,
                    }))
                }
            };
            let trimmed = text.trim();
            if trimmed.is_empty() || trimmed == HEADER {
                return None;
            }
            Some(parse_graph6(trimmed).map_err(|source| StreamError {
                line: line_no,
                source,
            }))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_k3() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn parse_edgeless_pair() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn parse_rejects_low_byte() {
        assert_eq!(
            parse_graph6("B\x20"),
            Err(Graph6Error::ByteOutOfRange { byte: 0x20, pos: 1 })
        );
    }

    #[test]
    fn parse_rejects_dirty_padding() {
        // K3 body is 111000; 111001 sets a padding bit.
        let bad = format!("B{}", char::from(0b111001 + 63));
        assert_eq!(parse_graph6(&bad), Err(Graph6Error::DirtyPadding));
    }

    #[test]
    fn write_k3_and_singleton() {
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<Bw").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn long_size_field_round_trip() {
        for n in [63usize, 100] {
            let g = Graph::cycle(n);
            let enc = write_graph6(&g);
            assert_eq!(enc.as_bytes()[0], 126);
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn eight_byte_size_rejected() {
        assert_eq!(parse_graph6("~~????"), Err(Graph6Error::OrderTooLarge));
    }

    #[test]
    fn stream_reads_in_order() {
        let data = ">>graph6<<\nBw\n\nA?\n";
        let graphs: Vec<_> = read_stream(data.as_bytes()).collect::<Result<_, _>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].order(), 3);
        assert_eq!(graphs[1].order(), 2);
    }

    #[test]
    fn stream_reports_line_numbers() {
        let data = "Bw\n!!bad\n";
        let results: Vec<_> = read_stream(data.as_bytes()).collect();
        assert!(results[0].is_ok());
        assert_eq!(results[1].as_ref().unwrap_err().line, 2);
    }

    #[test]
    fn empty_stream() {
        assert_eq!(read_stream("".as_bytes()).count(), 0);
    }
}
