//! Adjacency of two cosets given by their representatives.
//!
//! Two cosets are joined when some pair of their members differs by a
//! weight-2 vector. For representatives `x != y` the difference `z = x + y`
//! has weight 2, 4 or 6:
//!
//! * weight 2: `z` itself is the weight-2 witness, joined;
//! * weight 4: `z + c` has weight at least 4 for every codeword `c`, not joined;
//! * weight 6: only the weight-8 codewords can bring `z` down to weight 2,
//!   so those are scanned. A codeword at distance 4 rules out one at
//!   distance 2, so the scan stops at the first value `<= 4`.

use crate::gf2::Vec24;
use crate::golay::GolayCode;

use super::reps::is_representative;
use super::GraphError;

/// Smallest `weight(z + c)` over weight-8 codewords `c`, for `weight(z) == 6`.
///
/// Stops at the first codeword reaching 4 or less. Any result other than 2
/// or 4 is reported as [`GraphError::InvalidDistance`].
pub fn min_coset_distance(code: &GolayCode, z: Vec24) -> Result<u32, GraphError> {
    if z.weight() != 6 {
        return Err(GraphError::NotWeightSix(z));
    }
    let mut best = u32::MAX;
    for c in code.weight8() {
        let d = (z + *c).weight();
        if d < best {
            best = d;
            if d <= 4 {
                break;
            }
        }
    }
    match best {
        2 | 4 => Ok(best),
        distance => Err(GraphError::InvalidDistance { distance, z }),
    }
}

/// Whether the cosets represented by `x` and `y` are adjacent.
pub fn adjacent(code: &GolayCode, x: Vec24, y: Vec24) -> Result<bool, GraphError> {
    classify(code, x, y).map(|k| k.adjacent())
}

/// How an adjacency decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Same,
    Weight2,
    Weight4,
    /// Weight-6 difference resolved by the octad scan at this distance.
    Scanned(u32),
}

impl Decision {
    pub fn adjacent(self) -> bool {
        matches!(self, Decision::Weight2 | Decision::Scanned(2))
    }
}

pub fn classify(code: &GolayCode, x: Vec24, y: Vec24) -> Result<Decision, GraphError> {
    for r in [x, y] {
        if !is_representative(r) {
            return Err(GraphError::NotRepresentative(r));
        }
    }
    let z = x + y;
    match z.weight() {
        0 => Ok(Decision::Same),
        2 => Ok(Decision::Weight2),
        4 => Ok(Decision::Weight4),
        6 => min_coset_distance(code, z).map(Decision::Scanned),
        // Two representatives differ in at most 6 coordinates.
        _ => unreachable!("representatives {x} and {y} differ in more than 6 coordinates"),
    }
}

/// Tally of adjacency decisions over a set of pairs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdjacencyStats {
    pub pairs: u64,
    pub weight2: u64,
    pub weight4: u64,
    pub scanned_distance2: u64,
    pub scanned_distance4: u64,
}

impl AdjacencyStats {
    pub fn record(&mut self, d: Decision) {
        self.pairs += 1;
        match d {
            Decision::Same => {}
            Decision::Weight2 => self.weight2 += 1,
            Decision::Weight4 => self.weight4 += 1,
            Decision::Scanned(2) => self.scanned_distance2 += 1,
            Decision::Scanned(_) => self.scanned_distance4 += 1,
        }
    }

    pub fn merge(mut self, other: AdjacencyStats) -> AdjacencyStats {
        self.pairs += other.pairs;
        self.weight2 += other.weight2;
        self.weight4 += other.weight4;
        self.scanned_distance2 += other.scanned_distance2;
        self.scanned_distance4 += other.scanned_distance4;
        self
    }

    pub fn scanned(&self) -> u64 {
        self.scanned_distance2 + self.scanned_distance4
    }

    pub fn edges(&self) -> u64 {
        self.weight2 + self.scanned_distance2
    }
}
