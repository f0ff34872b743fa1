//! File formats: the binary vertex-set container, GAP export and edge
//! lists.

pub mod dat;
pub mod gap;

use std::io::{self, Write};

use crate::coset_graph::Graph;

pub use dat::{read_dat, write_dat, DatError, Endian};
pub use gap::{export_gap, write_gap};

/// Writes one `u v` line per edge, 1-based, `u < v`, sorted.
pub fn write_edge_list<W: Write>(mut w: W, g: &Graph) -> io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", u + 1, v + 1)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_is_one_based() {
        let g = Graph::from_edges(3, [(2, 0), (1, 2)]);
        let mut out = Vec::new();
        write_edge_list(&mut out, &g).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "1 3\n2 3\n");
    }
}
