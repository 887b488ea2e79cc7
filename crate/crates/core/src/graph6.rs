//! graph6 codec.
//!
//! A graph6 string is a vertex-count prefix followed by the upper triangle
//! of the adjacency matrix, read column by column (`x[0][1], x[0][2],
//! x[1][2], x[0][3], ...`), packed six bits per byte with 63 added to each
//! byte. Counts up to 62 take one byte; larger counts use `~` and three
//! (or `~~` and six) further bytes holding 18 (or 36) big-endian bits.

use crate::error::Graph6Error;
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Optional header some generators prepend.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { byte, offset });
    }

    let (n, body) = read_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooManyVertices {
            n,
            limit: MAX_VERTICES,
        });
    }
    let n = n as usize;
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: body.len() - expected,
        });
    }
    if !bits.is_multiple_of(6) {
        let pad = 6 - bits % 6;
        if (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    let mut rows = vec![VertexSet::empty(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

fn read_order(bytes: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let take = |from: usize, count: usize| -> Result<u64, Graph6Error> {
        let digits = bytes
            .get(from..from + count)
            .ok_or(Graph6Error::MalformedLength)?;
        Ok(digits
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS)))
    };
    if bytes[0] != 126 {
        Ok((u64::from(bytes[0] - BIAS), &bytes[1..]))
    } else if bytes.get(1) == Some(&126) {
        Ok((take(2, 6)?, &bytes[8..]))
    } else {
        Ok((take(1, 3)?, &bytes[4..]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encodings() {
        // K_1: 1 + 63 = 64 = '@', no adjacency bits.
        assert_eq!(encode(&Graph::complete(1).unwrap()), "@");
        // K_5: 'D' = 5 + 63; ten ones padded to 111111 111100 -> 126, 123.
        assert_eq!(encode(&Graph::complete(5).unwrap()), "D~{");
        // P_3 as 0-1-2: bits x01=1, x02=0, x12=1 -> 101000 = 40 -> 'g'.
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
    }

    #[test]
    fn decode_known_strings() {
        assert_eq!(decode("D~{").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(decode(">>graph6<<@\n").unwrap(), Graph::complete(1).unwrap());
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode("A?").unwrap(), Graph::edgeless(2).unwrap());
    }

    #[test]
    fn long_form_lengths_round_trip() {
        for n in [62, 63, 100, MAX_VERTICES] {
            let g = Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
            let s = encode(&g);
            if n > 62 {
                assert!(s.starts_with('~'));
            }
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("?"), Err(Graph6Error::ZeroVertices));
        assert!(matches!(
            decode("D~\u{7f}"),
            Err(Graph6Error::InvalidByte { offset: 2, .. })
        ));
        assert!(matches!(decode("D a"), Err(Graph6Error::InvalidByte { .. })));
        assert_eq!(
            decode("D~"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            decode("D~{?"),
            Err(Graph6Error::TrailingGarbage { extra: 1 })
        );
        assert_eq!(decode("D~~"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(decode("~?"), Err(Graph6Error::MalformedLength));
        // 2^17 vertices in the 18-bit form.
        assert!(matches!(
            decode("~_??"),
            Err(Graph6Error::TooManyVertices { n: 131072, .. })
        ));
    }
}
