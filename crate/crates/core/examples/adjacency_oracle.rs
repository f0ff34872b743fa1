//! Compares the graph's adjacency with a brute-force definition: two
//! cosets are adjacent iff some weight-2 vector moves one onto the other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srg2048::coset_graph::{classify, CosetGraph, Decision};
use srg2048::Vec24;

fn main() {
    let cg = CosetGraph::standard();
    let weight2: Vec<Vec24> = (0..24)
        .flat_map(|i| (i + 1..24).map(move |j| Vec24::from_support([i, j])))
        .collect();
    let oracle = |u: usize, v: usize| {
        let z = cg.reps.rep(u) + cg.reps.rep(v);
        weight2.iter().any(|&e| cg.code.contains(z + e))
    };

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut counts = [0usize; 4];
    for _ in 0..20_000 {
        let (u, v) = (rng.random_range(0..2048), rng.random_range(0..2048));
        assert_eq!(
            cg.graph.has_edge(u, v),
            u != v && oracle(u, v),
            "pair ({u}, {v})"
        );
        let i = match classify(&cg.code, cg.reps.rep(u), cg.reps.rep(v)).unwrap() {
            Decision::Same => 0,
            Decision::Weight2 => 1,
            Decision::Weight4 => 2,
            Decision::Scanned(_) => 3,
        };
        counts[i] += 1;
    }
    println!("20000 random pairs agree with the oracle");
    println!(
        "same {}, weight 2 {}, weight 4 {}, octad scan {}",
        counts[0], counts[1], counts[2], counts[3]
    );

    let n0: Vec<usize> = cg.graph.neighbors(0).iter().map(|&w| w as usize).collect();
    assert!(n0.iter().all(|&w| cg.reps.rep(w).weight() == 2));
    println!(
        "vertex 0 has {} neighbors, all weight-2 representatives",
        n0.len()
    );
}
