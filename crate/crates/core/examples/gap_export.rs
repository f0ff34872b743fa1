//! Writes the graph and one coclique in GAP syntax, ready for the GRAPE
//! package.
//!
//! ```bash
//! cargo run --release -p srg2048 --example gap_export [OUT]
//! ```

use srg2048::coclique::{search_maximal, SearchConfig};
use srg2048::io::export_gap;
use srg2048::CosetGraph;

fn main() {
    let cg = CosetGraph::standard();
    let config = SearchConfig {
        sizes: 30..=30,
        budget: 2_000,
        ..SearchConfig::default()
    };
    let sets = search_maximal(&cg.graph, &config).sets;
    let text = export_gap(&cg.graph, &sets);
    let lines: Vec<&str> = text.lines().collect();
    println!("{} bytes, {} lines", text.len(), lines.len());
    for l in &lines[lines.len() - 4..] {
        println!("  {l}");
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, &text).expect("writable path");
        println!("written to {path}");
    }
}
