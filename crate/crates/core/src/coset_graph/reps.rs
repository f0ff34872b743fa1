//! Canonical coset representatives.
//!
//! Every even-weight coset of the Golay code contains exactly one vector of
//! weight 0, weight 2, or weight 4 with bit 0 set. Those 1 + 276 + 1771 =
//! 2048 vectors, sorted by encoding, are the vertices of the graph.

use std::collections::BTreeMap;

use crate::gf2::Vec24;
use crate::golay::GolayCode;

use super::GraphError;

/// Number of even-weight cosets.
pub const VERTICES: usize = 2048;

/// Whether `x` has the shape of a coset representative.
#[inline]
pub fn is_representative(x: Vec24) -> bool {
    match x.weight() {
        0 | 2 => true,
        4 => x.bit(0),
        _ => false,
    }
}

/// Representative class of a vector, for census reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepClass {
    Zero,
    Weight2,
    Weight4Last1,
}

/// The 2048 representatives in ascending encoding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetReps {
    reps: Vec<Vec24>,
}

impl CosetReps {
    pub fn build() -> CosetReps {
        let mut reps = Vec::with_capacity(VERTICES);
        reps.push(Vec24::ZERO);
        for i in 0..24 {
            for j in i + 1..24 {
                reps.push(Vec24::from_support([i, j]));
            }
        }
        for a in 1..24 {
            for b in a + 1..24 {
                for c in b + 1..24 {
                    reps.push(Vec24::from_support([0, a, b, c]));
                }
            }
        }
        reps.sort_unstable();
        debug_assert_eq!(reps.len(), VERTICES);
        CosetReps { reps }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn as_slice(&self) -> &[Vec24] {
        &self.reps
    }

    /// Representative labelling vertex `v`.
    #[inline]
    pub fn rep(&self, v: usize) -> Vec24 {
        self.reps[v]
    }

    /// Vertex index of a representative.
    pub fn index_of(&self, x: Vec24) -> Option<usize> {
        self.reps.binary_search(&x).ok()
    }

    pub fn class_counts(&self) -> BTreeMap<RepClass, usize> {
        let mut out = BTreeMap::new();
        for r in &self.reps {
            let class = match r.weight() {
                0 => RepClass::Zero,
                2 => RepClass::Weight2,
                _ => RepClass::Weight4Last1,
            };
            *out.entry(class).or_insert(0) += 1;
        }
        out
    }
}

/// Representative of the coset of `x` by scanning all of `reps` with
/// membership tests.
pub fn rep_of(code: &GolayCode, reps: &CosetReps, x: Vec24) -> Result<Vec24, GraphError> {
    if x.weight() % 2 == 1 {
        return Err(GraphError::OddWeight(x));
    }
    reps.as_slice()
        .iter()
        .copied()
        .find(|r| code.contains(x + *r))
        .ok_or(GraphError::MissingRepresentative(x))
}

/// Syndrome-indexed map from cosets to vertices.
#[derive(Debug, Clone)]
pub struct CosetLookup {
    by_syndrome: Vec<u16>,
}

const NONE: u16 = u16::MAX;

impl CosetLookup {
    /// Fails if two representatives share a syndrome, i.e. lie in one coset.
    pub fn new(code: &GolayCode, reps: &CosetReps) -> Result<CosetLookup, GraphError> {
        let mut by_syndrome = vec![NONE; 1 << crate::golay::DIMENSION];
        for (v, r) in reps.as_slice().iter().enumerate() {
            let slot = &mut by_syndrome[code.syndrome(*r) as usize];
            if *slot != NONE {
                return Err(GraphError::SharedCoset(reps.rep(*slot as usize), *r));
            }
            *slot = v as u16;
        }
        Ok(CosetLookup { by_syndrome })
    }

    /// Vertex whose coset contains `x`.
    pub fn vertex_of(&self, code: &GolayCode, x: Vec24) -> Result<usize, GraphError> {
        if x.weight() % 2 == 1 {
            return Err(GraphError::OddWeight(x));
        }
        match self.by_syndrome[code.syndrome(x) as usize] {
            NONE => Err(GraphError::MissingRepresentative(x)),
            v => Ok(v as usize),
        }
    }

    pub fn rep_of(
        &self,
        code: &GolayCode,
        reps: &CosetReps,
        x: Vec24,
    ) -> Result<Vec24, GraphError> {
        self.vertex_of(code, x).map(|v| reps.rep(v))
    }

    /// Image of vertex `v` under translation by the even-weight vector `t`.
    pub fn translate(
        &self,
        code: &GolayCode,
        reps: &CosetReps,
        v: usize,
        t: Vec24,
    ) -> Result<usize, GraphError> {
        self.vertex_of(code, reps.rep(v) + t)
    }
}
