//! planar_code binary interchange: per graph one order byte, then each
//! vertex's clockwise neighbor list as 1-based bytes closed by 0x00.

use super::{GraphError, PlaneGraph};
use thiserror::Error;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("malformed header")]
    BadHeader,
    #[error("record truncated at byte {0}")]
    TruncatedRecord(usize),
    #[error("neighbor byte {got} out of range for order {order} (record {record})")]
    VertexOutOfRange {
        record: usize,
        got: u8,
        order: usize,
    },
    #[error("unsupported graph order in record {0} (0 or multi-byte encoding)")]
    UnsupportedOrder(usize),
    #[error("graph {0} too large for single-byte planar_code")]
    TooLarge(usize),
    #[error("record {record} is not a valid plane graph: {source}")]
    Graph {
        record: usize,
        #[source]
        source: GraphError,
    },
}

/// Parse a planar_code stream (header optional) into plane graphs.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, CodeError> {
    let mut data = bytes;
    if data.starts_with(b">>") {
        if !data.starts_with(PLANAR_CODE_HEADER) {
            return Err(CodeError::BadHeader);
        }
        data = &data[PLANAR_CODE_HEADER.len()..];
    }
    let mut graphs = Vec::new();
    let mut pos = 0usize;
    while pos < data.len() {
        let record = graphs.len();
        let n = data[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(CodeError::UnsupportedOrder(record));
        }
        let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut rot = Vec::new();
            loop {
                let b = *data.get(pos).ok_or(CodeError::TruncatedRecord(pos))?;
                pos += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(CodeError::VertexOutOfRange {
                        record,
                        got: b,
                        order: n,
                    });
                }
                rot.push(b as usize - 1);
            }
            rotations.push(rot);
        }
        let g = PlaneGraph::build(rotations)
            .map_err(|source| CodeError::Graph { record, source })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Serialize graphs as planar_code, always emitting the header.
pub fn serialize_planar_code(graphs: &[PlaneGraph]) -> Result<Vec<u8>, CodeError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for (i, g) in graphs.iter().enumerate() {
        if g.n() > 255 {
            return Err(CodeError::TooLarge(i));
        }
        out.push(g.n() as u8);
        for v in 0..g.n() {
            for &u in g.rotation(v) {
                out.push(u as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}
