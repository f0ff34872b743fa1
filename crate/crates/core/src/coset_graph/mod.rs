//! The graph on the 2048 even-weight cosets of the Golay code, two cosets
//! joined when they have members differing in exactly two coordinates.

pub mod adjacency;
pub mod graph;
pub mod reps;
pub mod srg;

use thiserror::Error;

use crate::gf2::Vec24;
use crate::golay::{residue_permutations, GolayCode};

pub use adjacency::{adjacent, classify, min_coset_distance, AdjacencyStats, Decision};
pub use graph::{build_graph, build_graph_with_stats, Graph, DEGREE};
pub use reps::{is_representative, rep_of, CosetLookup, CosetReps, RepClass, VERTICES};
pub use srg::{delsarte_bound, delsarte_bound_real, verify_srg, SrgError, SrgParams, TARGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vector {0} has odd weight and lies in no even-weight coset")]
    OddWeight(Vec24),
    #[error("vector {0} is not a coset representative")]
    NotRepresentative(Vec24),
    #[error("no representative found for the coset of {0}")]
    MissingRepresentative(Vec24),
    #[error("representatives {0} and {1} lie in the same coset")]
    SharedCoset(Vec24, Vec24),
    #[error("octad scan needs a weight-6 difference, got {0}")]
    NotWeightSix(Vec24),
    #[error("invalid distance {distance} for difference {z}")]
    InvalidDistance { distance: u32, z: Vec24 },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
}

/// Code, representatives, coset lookup and graph built together.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub code: GolayCode,
    pub reps: CosetReps,
    pub lookup: CosetLookup,
    pub graph: Graph,
    pub stats: AdjacencyStats,
}

impl CosetGraph {
    pub fn build(code: GolayCode, workers: usize) -> Result<CosetGraph, GraphError> {
        let reps = CosetReps::build();
        let lookup = CosetLookup::new(&code, &reps)?;
        let (graph, stats) = build_graph_with_stats(&code, &reps, workers)?;
        Ok(CosetGraph {
            code,
            reps,
            lookup,
            graph,
            stats,
        })
    }

    /// Graph built from the built-in generator matrix.
    pub fn standard() -> CosetGraph {
        CosetGraph::build(GolayCode::standard(), 0).expect("built-in code yields the coset graph")
    }

    /// Image of vertex `v` under translation by the even-weight vector `t`.
    /// Translation maps cosets to cosets and preserves adjacency.
    pub fn translate(&self, v: usize, t: Vec24) -> Result<usize, GraphError> {
        self.lookup.translate(&self.code, &self.reps, v, t)
    }

    /// Vertex permutation induced by the coordinate permutation `p`, or
    /// `None` when `p` does not preserve the code. Such permutations fix
    /// vertex 0 and preserve adjacency.
    pub fn vertex_permutation(&self, p: &[usize; 24]) -> Option<Vec<usize>> {
        if !self.code.preserves(p) {
            return None;
        }
        let image = |v: usize| {
            self.lookup
                .vertex_of(&self.code, self.reps.rep(v).permute(p))
                .expect("permutations keep weight parity")
        };
        Some((0..self.reps.len()).map(image).collect())
    }

    /// Vertex permutations from [`residue_permutations`] that preserve this
    /// code; all of them for the default generators.
    pub fn residue_symmetries(&self) -> Vec<Vec<usize>> {
        residue_permutations()
            .iter()
            .filter_map(|p| self.vertex_permutation(p))
            .collect()
    }
}
