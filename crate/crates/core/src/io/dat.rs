//! Binary container for vertex sets.
//!
//! ```text
//! record := size:u8  entry[size]
//! entry  := 3-byte unsigned integer, the Vec24 encoding of a representative
//! file   := record*            (no header, no padding)
//! ```
//!
//! `size` must lie in `[2, 85]`. Entries are little-endian by default.
//! Records are read in file order; entries inside a record may appear in
//! any order and are mapped to vertex indices through [`CosetReps`].

use thiserror::Error;

use crate::coclique::VertexSet;
use crate::coset_graph::CosetReps;
use crate::gf2::Vec24;

/// Smallest record size accepted.
pub const MIN_SET: usize = 2;
/// Largest record size accepted.
pub const MAX_SET: usize = 85;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Endian {
    #[default]
    Little,
    Big,
}

impl Endian {
    fn decode(self, b: [u8; 3]) -> u32 {
        match self {
            Endian::Little => u32::from_le_bytes([b[0], b[1], b[2], 0]),
            Endian::Big => u32::from_be_bytes([0, b[0], b[1], b[2]]),
        }
    }

    fn encode(self, v: u32) -> [u8; 3] {
        match self {
            Endian::Little => {
                let b = v.to_le_bytes();
                [b[0], b[1], b[2]]
            }
            Endian::Big => {
                let b = v.to_be_bytes();
                [b[1], b[2], b[3]]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatError {
    #[error("record {record} at byte {offset}: size {size} out of range (must be in the range from 2 to 85)")]
    SizeOutOfRange {
        record: usize,
        offset: usize,
        size: usize,
    },
    #[error("record {record} at byte {offset}: {value:#08x} is not a proper coset representation")]
    NotRepresentative {
        record: usize,
        offset: usize,
        value: u32,
    },
    #[error("record {record} at byte {offset}: vertex {vertex} listed twice")]
    Duplicate {
        record: usize,
        offset: usize,
        vertex: usize,
    },
    #[error(
        "record {record} at byte {offset}: truncated, needs {needed} bytes but {available} remain"
    )]
    Truncated {
        record: usize,
        offset: usize,
        needed: usize,
        available: usize,
    },
    #[error("set {record}: vertex {vertex} out of range")]
    VertexOutOfRange { record: usize, vertex: usize },
}

/// Parses a whole stream; `record` in errors counts from 0.
pub fn read_dat(
    bytes: &[u8],
    reps: &CosetReps,
    endian: Endian,
) -> Result<Vec<VertexSet>, DatError> {
    let mut sets = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let record = sets.len();
        let offset = pos;
        let size = bytes[pos] as usize;
        if !(MIN_SET..=MAX_SET).contains(&size) {
            return Err(DatError::SizeOutOfRange {
                record,
                offset,
                size,
            });
        }
        let needed = 1 + 3 * size;
        let available = bytes.len() - pos;
        if available < needed {
            return Err(DatError::Truncated {
                record,
                offset,
                needed,
                available,
            });
        }
        let mut members = Vec::with_capacity(size);
        for (i, chunk) in bytes[pos + 1..pos + needed].chunks_exact(3).enumerate() {
            let entry_offset = pos + 1 + 3 * i;
            let value = endian.decode([chunk[0], chunk[1], chunk[2]]);
            let vertex = Vec24::new(value).and_then(|x| reps.index_of(x)).ok_or(
                DatError::NotRepresentative {
                    record,
                    offset: entry_offset,
                    value,
                },
            )?;
            members.push(vertex);
        }
        let set = VertexSet::new(members, reps.len()).map_err(|e| match e {
            crate::coclique::CocliqueError::Duplicate(vertex) => DatError::Duplicate {
                record,
                offset,
                vertex,
            },
            other => unreachable!("indices come from the representative table: {other}"),
        })?;
        sets.push(set);
        pos += needed;
    }
    Ok(sets)
}

/// Serializes sets, members in ascending vertex order.
pub fn write_dat(
    sets: &[VertexSet],
    reps: &CosetReps,
    endian: Endian,
) -> Result<Vec<u8>, DatError> {
    let mut out = Vec::with_capacity(sets.iter().map(|s| 1 + 3 * s.len()).sum());
    for (record, s) in sets.iter().enumerate() {
        if !(MIN_SET..=MAX_SET).contains(&s.len()) {
            return Err(DatError::SizeOutOfRange {
                record,
                offset: out.len(),
                size: s.len(),
            });
        }
        out.push(s.len() as u8);
        for &v in s.members() {
            if v >= reps.len() {
                return Err(DatError::VertexOutOfRange { record, vertex: v });
            }
            out.extend(endian.encode(reps.rep(v).bits()));
        }
    }
    Ok(out)
}
