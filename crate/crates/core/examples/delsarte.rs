//! Eigenvalues of a strongly regular graph from its parameters, and the
//! ratio bound on cocliques they give.

use srg2048::coset_graph::{SrgParams, TARGET};

fn main() {
    let (lhs, rhs) = TARGET.feasibility_sides();
    println!("{TARGET}: k(k - λ - 1) = {lhs}, (v - k - 1)μ = {rhs}");
    let (r, s) = TARGET.integral_eigenvalues().expect("integral");
    println!(
        "x^2 - {}x - {} = 0 has roots {r} and {s}",
        TARGET.lambda - TARGET.mu,
        TARGET.k - TARGET.mu
    );
    println!(
        "coclique bound: floor({} / (1 + {}/{})) = {}",
        TARGET.v,
        TARGET.k,
        -s,
        TARGET.delsarte_bound()
    );

    for p in [
        SrgParams::new(10, 3, 0, 1),
        SrgParams::new(5, 2, 0, 1),
        SrgParams::new(16, 5, 0, 2),
    ] {
        let (r, s) = p.eigenvalues();
        println!(
            "{p}: eigenvalues {r:.3}, {s:.3}, bound {}",
            p.delsarte_bound()
        );
    }
}
