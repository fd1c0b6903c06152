use super::FormatError;
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const MAX_ORDER: u64 = (1 << 36) - 1;

fn data_byte(b: u8, at: usize) -> Result<u64, FormatError> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as u64)
    } else {
        Err(FormatError::ByteOutOfRange { byte: b, offset: at })
    }
}

fn take<'a>(bytes: &'a [u8], pos: &mut usize, count: usize) -> Result<&'a [u8], FormatError> {
    let end = *pos + count;
    let slice = bytes.get(*pos..end).ok_or(FormatError::Truncated { expected: end, found: bytes.len() })?;
    *pos = end;
    Ok(slice)
}

fn read_big_endian(bytes: &[u8], start: usize) -> Result<u64, FormatError> {
    bytes
        .iter()
        .enumerate()
        .try_fold(0u64, |acc, (i, &b)| Ok(acc << 6 | data_byte(b, start + i)?))
}

/// Parses one graph6 line; a trailing newline is accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, FormatError> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let mut pos = if line.starts_with(HEADER) { HEADER.len() } else { 0 };

    let first = *take(line, &mut pos, 1)?.first().expect("one byte");
    let n = if first != 126 {
        data_byte(first, pos - 1)?
    } else if line.get(pos) != Some(&126) {
        let start = pos;
        read_big_endian(take(line, &mut pos, 3)?, start)?
    } else {
        pos += 1;
        let start = pos;
        read_big_endian(take(line, &mut pos, 6)?, start)?
    };
    let n = usize::try_from(n).map_err(|_| FormatError::TooLarge(n))?;

    let bits = n * n.saturating_sub(1) / 2;
    let start = pos;
    let body = take(line, &mut pos, bits.div_ceil(6))?;
    if pos != line.len() {
        return Err(FormatError::TrailingBytes { offset: pos });
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &b) in body.iter().enumerate() {
        let x = data_byte(b, start + k)?;
        for shift in (0..6).rev() {
            if k * 6 + (5 - shift) >= bits {
                if x >> shift & 1 == 1 {
                    return Err(FormatError::NonzeroPadding);
                }
                continue;
            }
            if x >> shift & 1 == 1 {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 decoding yields valid edges"))
}

/// Encodes `g` as graph6 without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER, "graph6 supports at most 2^36 - 1 vertices");
    let mut out: Vec<u8> = Vec::new();
    let push_wide = |out: &mut Vec<u8>, v: u64, digits: u32| {
        for d in (0..digits).rev() {
            out.push(63 + (v >> (6 * d) & 63) as u8);
        }
    };
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_wide(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_wide(&mut out, n as u64, 6);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
