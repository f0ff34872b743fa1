//! GAP source file for the grape package.
//!
//! The file defines `A`, the list of adjacency lists, and `MIS`, a list of
//! vertex sets, then builds the graph object `Gra` from `A`. Vertices are
//! numbered from 1.

use std::io::{self, Write};

use crate::coclique::VertexSet;
use crate::coset_graph::Graph;

/// Writes the GAP file to `w`.
pub fn write_gap<W: Write>(mut w: W, g: &Graph, sets: &[VertexSet]) -> io::Result<()> {
    writeln!(w, "A:= [")?;
    let n = g.vertex_count();
    for u in 0..n {
        write_list(&mut w, g.neighbors(u).iter().map(|&v| v as usize + 1))?;
        writeln!(w, "{}", if u + 1 < n { "," } else { "" })?;
    }
    writeln!(w, "];")?;
    if sets.is_empty() {
        writeln!(w, "MIS:= [];")?;
    } else {
        writeln!(w, "MIS:= [")?;
        for (i, s) in sets.iter().enumerate() {
            write_list(&mut w, s.members().iter().map(|&v| v + 1))?;
            writeln!(w, "{}", if i + 1 < sets.len() { "," } else { "" })?;
        }
        writeln!(w, "];")?;
    }
    writeln!(w, "LoadPackage(\"grape\");;")?;
    writeln!(w, "Gra:=Graph(Group(), [1..{n}], OnPoints,")?;
    writeln!(w, "function(x,y) return (x in A[y]); end, true);")?;
    Ok(())
}

/// The GAP file as a string.
pub fn export_gap(g: &Graph, sets: &[VertexSet]) -> String {
    let mut buf = Vec::new();
    write_gap(&mut buf, g, sets).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ASCII output")
}

fn write_list<W: Write>(w: &mut W, items: impl Iterator<Item = usize>) -> io::Result<()> {
    w.write_all(b"[")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            w.write_all(b",")?;
        }
        write!(w, "{x}")?;
    }
    w.write_all(b"]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]);
        let s = VertexSet::new([0, 3], 4).unwrap();
        let text = export_gap(&g, &[s]);
        assert_eq!(
            text,
            "A:= [\n[2,3],\n[1,3],\n[1,2,4],\n[3]\n];\nMIS:= [\n[1,4]\n];\n\
             LoadPackage(\"grape\");;\n\
             Gra:=Graph(Group(), [1..4], OnPoints,\n\
             function(x,y) return (x in A[y]); end, true);\n"
        );
    }

    #[test]
    fn empty_set_list() {
        let g = Graph::from_edges(2, [(0, 1)]);
        assert!(export_gap(&g, &[]).contains("\nMIS:= [];\n"));
    }
}
