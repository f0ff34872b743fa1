//! Seeded search for maximal cocliques of sizes 20 through 40.
//!
//! ```bash
//! cargo run --release -p srg2048 --example coclique_search [MIN MAX BUDGET SEED]
//! ```

use std::time::Instant;

use srg2048::coclique::{check_set, search_maximal, SearchConfig};
use srg2048::CosetGraph;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let cg = CosetGraph::standard();
    let mut config = SearchConfig {
        symmetries: cg.residue_symmetries(),
        ..SearchConfig::default()
    };
    if let [lo, hi, rest @ ..] = args.as_slice() {
        config.sizes = *lo as usize..=*hi as usize;
        if let Some(b) = rest.first() {
            config.budget = *b;
        }
        if let Some(s) = rest.get(1) {
            config.seed = *s;
        }
    }

    let t = Instant::now();
    let out = search_maximal(&cg.graph, &config);
    println!(
        "{} maximal cocliques constructed in {:.2?}, seed {}",
        out.constructed,
        t.elapsed(),
        config.seed
    );
    for s in &out.sets {
        let r = check_set(&cg.graph, s, 72);
        println!(
            "size {:2}  maximal {}  profile {}",
            r.size,
            r.is_maximal_coclique(),
            r.profile
        );
    }
    let missing = out.missing(config.sizes.clone());
    if !missing.is_empty() {
        println!("not found: {missing:?}");
    }
    let seen: Vec<String> = out
        .sizes_seen
        .iter()
        .map(|(s, n)| format!("{s}:{n}"))
        .collect();
    println!("size histogram {}", seen.join(" "));
    if let Some(l) = &out.largest {
        println!("largest: {}", l.len());
    }
}
