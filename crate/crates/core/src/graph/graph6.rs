//! graph6 encoding (McKay's format): a size header followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte.

use super::{Graph, GraphError};

/// Largest order accepted by [`encode_graph6`].
pub const GRAPH6_MAX_ORDER: usize = 1 << 18;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is printable ASCII"))
}

fn parse_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], pos: usize) -> Result<usize, GraphError> {
    match bytes.get(pos) {
        Some(&c) if (63..=126).contains(&c) => Ok((c - BIAS) as usize),
        Some(&c) => Err(parse_err(pos, format!("byte 0x{c:02x} outside graph6 range"))),
        None => Err(parse_err(pos, "truncated size header")),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted; byte offsets in errors refer to the input.
pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let raw = text.as_bytes();
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = raw.len();
    while end > start && matches!(raw[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &raw[..end];
    if start >= bytes.len() {
        return Err(parse_err(start, "empty graph6 string"));
    }

    let mut pos = start;
    let n = if bytes[pos] != 126 {
        let n = sixbits(bytes, pos)?;
        pos += 1;
        n
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut n = 0;
        for i in 1..=3 {
            n = (n << 6) | sixbits(bytes, pos + i)?;
        }
        pos += 4;
        n
    } else {
        let mut n = 0;
        for i in 2..=7 {
            n = (n << 6) | sixbits(bytes, pos + i)?;
        }
        pos += 8;
        n
    };
    if n > GRAPH6_MAX_ORDER {
        return Err(parse_err(start, format!("order {n} exceeds supported maximum")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < need {
        return Err(parse_err(
            bytes.len(),
            format!("truncated adjacency data: expected {need} bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_err(pos + need, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for (k, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(pos + k, format!("byte 0x{c:02x} outside graph6 range")));
        }
        let v = c - BIAS;
        if k + 1 == need && bits % 6 != 0 && v & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(parse_err(pos + k, "nonzero padding bits"));
        }
        for shift in (0..6).rev() {
            if bit >= bits {
                break;
            }
            if v >> shift & 1 == 1 {
                let (i, j) = index_to_pair(bit);
                g.add_edge(i, j).expect("pair in range");
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle enumeration
/// `(0,1), (0,2), (1,2), (0,3), ...`.
fn index_to_pair(idx: usize) -> (usize, usize) {
    // j is the largest value with j(j-1)/2 <= idx
    let j = (8 * idx + 1).isqrt().div_ceil(2);
    (idx - j * (j - 1) / 2, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(encode_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::new(0)).unwrap(), "?");
        let c5 = Graph::cycle(5);
        assert_eq!(encode_graph6(&c5).unwrap(), "Dhc");
    }

    #[test]
    fn pair_index_inverse() {
        let mut idx = 0;
        for j in 1..60 {
            for i in 0..j {
                assert_eq!(index_to_pair(idx), (i, j));
                idx += 1;
            }
        }
    }

    #[test]
    fn large_headers_round_trip() {
        let mut g = Graph::new(100);
        g.add_edge(0, 99).unwrap();
        g.add_edge(42, 63).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = decode_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(
            decode_graph6(""),
            Err(GraphError::Parse { offset: 0, .. })
        ));
        // n = 5 needs two data bytes
        assert!(matches!(
            decode_graph6("Dh"),
            Err(GraphError::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            decode_graph6("B\x01"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6("~?"),
            Err(GraphError::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            decode_graph6("Bww"),
            Err(GraphError::Parse { offset: 2, .. })
        ));
        // K3 is "Bw"; "Bx" sets a padding bit
        assert!(matches!(
            decode_graph6("Bx"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
    }
}
