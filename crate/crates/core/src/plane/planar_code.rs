//! The `planar_code` binary format used by plantri and buckygen.
//!
//! A file starts with `>>planar_code<<`. Each graph is its order `n`
//! followed, for every vertex, by its 1-based neighbours in clockwise order
//! and a terminating 0. Only the single-byte variant is supported.

use crate::error::CodecError;
use crate::plane::PlaneGraph;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Decodes every graph in `bytes`.
pub fn from_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, CodecError> {
    if !bytes.starts_with(HEADER) {
        let offset = bytes
            .iter()
            .zip(HEADER)
            .position(|(a, b)| a != b)
            .unwrap_or(bytes.len());
        return Err(CodecError::Header { offset });
    }
    let mut pos = HEADER.len();
    let mut out = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            // plantri marks the 2-byte variant with a leading zero
            return Err(CodecError::Unsupported(0));
        }
        let mut rotation = Vec::with_capacity(n);
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(CodecError::Truncated { offset: pos });
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                let w = b as usize;
                if w > n {
                    return Err(CodecError::BadVertex { value: w, offset: pos - 1 });
                }
                nbrs.push(w - 1);
            }
            rotation.push(nbrs);
        }
        let g = PlaneGraph::new(rotation)
            .map_err(|source| CodecError::Graph { offset: start, source })?;
        out.push(g);
    }
    Ok(out)
}

/// Encodes one graph as a record without the file header.
pub fn encode_record(g: &PlaneGraph) -> Result<Vec<u8>, CodecError> {
    let n = g.order();
    if n == 0 || n > 255 {
        return Err(CodecError::Unsupported(n));
    }
    let mut out = Vec::with_capacity(1 + n + 2 * g.size());
    out.push(n as u8);
    for v in 0..n {
        out.extend(g.rotation(v).iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(out)
}

/// Encodes a single graph, header included.
pub fn to_planar_code(g: &PlaneGraph) -> Result<Vec<u8>, CodecError> {
    to_planar_code_many(std::slice::from_ref(g))
}

/// Encodes several graphs into one file.
pub fn to_planar_code_many(graphs: &[PlaneGraph]) -> Result<Vec<u8>, CodecError> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        out.extend(encode_record(g)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::named;

    #[test]
    fn round_trip_f24() {
        let g = named::f24();
        let bytes = to_planar_code(&g).unwrap();
        let back = from_planar_code(&bytes).unwrap();
        assert_eq!(back, vec![g.clone()]);
        assert_eq!(to_planar_code(&back[0]).unwrap(), bytes);
    }

    #[test]
    fn encoded_length() {
        let g = named::dodecahedron();
        let bytes = to_planar_code(&g).unwrap();
        let body: usize = (0..g.order()).map(|v| g.degree(v) + 1).sum();
        assert_eq!(bytes.len(), HEADER.len() + 1 + body);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_planar_code(b">>planar_cod"), Err(CodecError::Header { .. })));
        let mut bytes = HEADER.to_vec();
        bytes.extend([2, 2, 0, 1]);
        assert!(matches!(from_planar_code(&bytes), Err(CodecError::Truncated { offset: 19 })));
        let mut bytes = HEADER.to_vec();
        bytes.extend([2, 2, 0, 0]);
        assert!(matches!(from_planar_code(&bytes), Err(CodecError::Graph { offset: 15, .. })));
        assert_eq!(from_planar_code(HEADER).unwrap(), vec![]);
    }
}
