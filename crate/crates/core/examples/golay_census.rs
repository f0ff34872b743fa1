//! Builds the Golay code from the default generator matrix and prints its
//! weight distribution, then shows a corrupted matrix being rejected.

use std::time::Instant;

use srg2048::golay::{GolayCode, DEFAULT_GENERATORS};

fn main() {
    let t = Instant::now();
    let code = GolayCode::standard();
    println!(
        "{} codewords in {:.2?}",
        code.codewords().len(),
        t.elapsed()
    );
    for (w, n) in code.weight_distribution() {
        println!("  weight {w:2}: {n}");
    }
    println!("octads: {}", code.weight8().len());

    let x = code.codewords()[1234];
    println!("codeword {x} has syndrome {:#05x}", code.syndrome(x));

    // Flip one bit of the last row: still 12 independent rows, wrong code.
    let mut rows: Vec<String> = DEFAULT_GENERATORS.iter().map(|s| s.to_string()).collect();
    rows[11].replace_range(0..1, "1");
    match GolayCode::from_generator_text(&rows.join("\n")) {
        Ok(_) => println!("corrupted matrix accepted?"),
        Err(e) => println!("corrupted matrix rejected: {e}"),
    }
}
