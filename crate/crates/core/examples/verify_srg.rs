//! Builds the coset graph and checks every pair of vertices.
//!
//! ```bash
//! cargo run --release -p srg2048 --example verify_srg
//! ```

use std::time::Instant;

use srg2048::coset_graph::{verify_srg, CosetGraph, TARGET};
use srg2048::GolayCode;

fn main() {
    let t = Instant::now();
    let cg = CosetGraph::build(GolayCode::standard(), 0).expect("graph construction");
    let s = cg.stats;
    println!(
        "built {} vertices, {} edges in {:.2?}",
        cg.graph.vertex_count(),
        cg.graph.edge_count(),
        t.elapsed()
    );
    println!(
        "pairs: {} | difference weight 2: {} | weight 4: {} | weight 6: {} (octad distance 2: {}, distance 4: {})",
        s.pairs,
        s.weight2,
        s.weight4,
        s.scanned(),
        s.scanned_distance2,
        s.scanned_distance4
    );
    println!("octad scan never left {{2, 4}}: no invalid distance");

    let t = Instant::now();
    let params = verify_srg(&cg.graph, 1).expect("strongly regular");
    println!(
        "srg{params} verified over all pairs in {:.2?} (single thread)",
        t.elapsed()
    );
    assert_eq!(params, TARGET);

    let (r, s) = params.integral_eigenvalues().expect("integral eigenvalues");
    println!(
        "restricted eigenvalues {r}, {s}; ratio bound {}",
        params.delsarte_bound()
    );
}
