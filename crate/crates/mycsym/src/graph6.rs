//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Single-byte header `n + 63`, then the upper triangle in column order —
//! pairs (0,1), (0,2), (1,2), (0,3), … — packed 6 bits per byte, each byte
//! offset by 63. Padding bits at the end of the stream are ignored on input
//! and written as zero on output.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 length byte {byte} out of range (only n <= 62 supported)")]
    BadLengthByte { byte: u8 },
    #[error("non-printable byte {byte} in graph6 data")]
    NonPrintable { byte: u8 },
    #[error("graph6 body has {got} bytes, expected {expected}")]
    WrongBodyLength { expected: usize, got: usize },
    #[error("graph on {n} vertices does not fit graph6 (n <= 62)")]
    TooLarge { n: usize },
}

/// Upper-triangle pairs in graph6 bit order.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for (i, j) in pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        nbits += 1;
        if nbits == 6 {
            out.push(63 + acc);
            acc = 0;
            nbits = 0;
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end().as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == b'~' {
        return Err(Graph6Error::BadLengthByte { byte: head });
    }
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::NonPrintable { byte: head });
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongBodyLength { expected, got: body.len() });
    }
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Graph6Error::NonPrintable { byte: bad });
    }
    let mut g = Graph::new(n);
    for (k, (i, j)) in pairs(n).enumerate() {
        let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1;
        if bit == 1 {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}
