//! The 2048 coset representatives and the syndrome lookup that maps any
//! even-weight vector to its vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srg2048::coset_graph::{CosetLookup, CosetReps};
use srg2048::{GolayCode, Vec24};

fn main() {
    let code = GolayCode::standard();
    let reps = CosetReps::build();
    println!("{} representatives", reps.len());
    for (class, n) in reps.class_counts() {
        println!("  {class:?}: {n}");
    }

    // Construction fails if two representatives share a coset.
    let lookup = CosetLookup::new(&code, &reps).expect("representatives in distinct cosets");
    println!("all representatives lie in distinct cosets");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let x = loop {
            let x = Vec24::new(rng.random_range(0..1 << 24)).unwrap();
            if x.weight().is_multiple_of(2) {
                break x;
            }
        };
        let v = lookup.vertex_of(&code, x).unwrap();
        println!(
            "{x} (weight {:2}) -> vertex {v:4}, representative {}",
            x.weight(),
            reps.rep(v)
        );
    }
}
