//! The strongly regular graph srg(2048, 276, 44, 36) on the even-weight
//! cosets of the extended binary Golay code.
//!
//! * [`gf2`]: length-24 binary vectors.
//! * [`golay`]: the code, its weight distribution and membership.
//! * [`coset_graph`]: representatives, adjacency, graph construction and
//!   exhaustive parameter verification.
//! * [`coclique`]: maximal coclique checks, the external profile and pair
//!   invariant, and a seeded randomized search.
//! * [`io`]: the binary vertex-set container, GAP/grape export and edge lists.
//!
//! ```no_run
//! use srg2048::coset_graph::{verify_srg, CosetGraph, TARGET};
//!
//! let g = CosetGraph::standard();
//! assert_eq!(verify_srg(&g.graph, 0).unwrap(), TARGET);
//! ```

pub mod bits;
pub mod coclique;
pub mod coset_graph;
pub mod gf2;
pub mod golay;
pub mod io;

pub use coclique::{ExternalProfile, VertexSet};
pub use coset_graph::{CosetGraph, Graph, SrgParams};
pub use gf2::Vec24;
pub use golay::GolayCode;

/// Runs `f` on a rayon pool with `workers` threads (`0`: rayon's default).
pub(crate) fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
