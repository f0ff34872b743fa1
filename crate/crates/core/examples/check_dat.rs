//! Writes sets to the DAT format, reads them back and checks each one.
//! Pass a DAT file to check it instead.
//!
//! ```bash
//! cargo run --release -p srg2048 --example check_dat [FILE]
//! ```

use srg2048::coclique::{check_set, search_maximal, SearchConfig};
use srg2048::io::{read_dat, write_dat, Endian};
use srg2048::{CosetGraph, VertexSet};

fn main() {
    let cg = CosetGraph::standard();
    let bytes = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path).expect("readable file"),
        None => {
            let config = SearchConfig {
                sizes: 24..=28,
                budget: 2_000,
                ..SearchConfig::default()
            };
            let mut sets = search_maximal(&cg.graph, &config).sets;
            // An adjacent pair, to show a failing record.
            let a = cg.graph.neighbors(0)[0] as usize;
            sets.push(VertexSet::new([0, a], 2048).unwrap());
            write_dat(&sets, &cg.reps, Endian::Little).unwrap()
        }
    };
    println!("{} bytes", bytes.len());
    let sets = read_dat(&bytes, &cg.reps, Endian::Little).expect("well-formed DAT");
    for (i, s) in sets.iter().enumerate() {
        let r = check_set(&cg.graph, s, 72);
        match r.edge {
            Some((u, v)) => println!("set {}: size {}, not a coclique ({u} ~ {v})", i + 1, r.size),
            None => println!(
                "set {}: size {}, maximal {}, profile {}",
                i + 1,
                r.size,
                r.maximal,
                r.profile
            ),
        }
    }

    // Malformed input is rejected with the offending offset.
    for bad in [
        &[1u8, 0, 0, 0][..],
        &[2, 0, 0, 0, 3, 0][..],
        &[2, 7, 0, 0, 3, 0, 0][..],
    ] {
        println!(
            "{bad:?}: {}",
            read_dat(bad, &cg.reps, Endian::Little).unwrap_err()
        );
    }
}
