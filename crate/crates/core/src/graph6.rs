//! graph6 codec.
//!
//! Size header: one byte `63 + n` for `n <= 62`, `~` plus three 6-bit bytes for
//! `n <= 258047`, `~~` plus six 6-bit bytes beyond. The body lists the upper
//! triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ..`), packed
//! six bits per byte, big-endian within each byte, each byte offset by 63.
//! Padding bits must be zero so that decoding and re-encoding is the identity.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Error::parse(at, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(Error::parse(at, "unexpected end of input")),
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        if n <= 258_047 {
            return Err(Error::parse(
                0,
                format!("non-minimal size header for n={n}"),
            ));
        }
        Ok((n as usize, 8))
    } else {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        if n <= 62 {
            return Err(Error::parse(
                0,
                format!("non-minimal size header for n={n}"),
            ));
        }
        Ok((n as usize, 4))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker and trailing
/// line terminator are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(skip, "empty graph6 string"));
    }
    let offset = |e: Error| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + skip,
            message,
        },
        other => other,
    };
    let (n, start) = read_size(bytes).map_err(offset)?;
    let mut g = Graph::try_empty(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != start + nbytes {
        return Err(Error::parse(
            skip + bytes.len().min(start + nbytes),
            format!(
                "expected {} bytes for {n} vertices, found {}",
                start + nbytes,
                bytes.len()
            ),
        ));
    }
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = start + k / 6;
            let value = sextet(bytes, byte).map_err(offset)?;
            if (value >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = start + nbytes - 1;
        let pad = 6 - nbits % 6;
        if sextet(bytes, last).map_err(offset)? & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(skip + last, "non-zero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_encodings() {
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::path(3)), "Bg");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
    }

    #[test]
    fn petgraph_reference_string() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_headers_round_trip() {
        for n in [62, 63, 100] {
            let g = Graph::cycle(n);
            let s = encode(&g);
            assert_eq!(s.as_bytes()[0] == b'~', n > 62);
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn header_marker_and_newline() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        // too short: K_3 needs one body byte
        assert!(matches!(decode("B"), Err(Error::Parse { offset: 1, .. })));
        // too long
        assert!(matches!(decode("Bww"), Err(Error::Parse { offset: 2, .. })));
        // invalid byte in body
        assert!(matches!(decode("B "), Err(Error::Parse { offset: 1, .. })));
        // padding bit set: "Bx" has body 111001
        assert!(matches!(decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        // offsets account for the marker
        assert!(matches!(
            decode(">>graph6<<B"),
            Err(Error::Parse { offset: 11, .. })
        ));
        // non-minimal long header for n = 3
        assert!(matches!(decode("~??Bw"), Err(Error::Parse { .. })));
    }
}
