//! Oracles shared by the integration tests. They restate the definitions
//! directly, with hash sets and plain loops, and share no code with the
//! library beyond the `Vec24` container and the default generator rows.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use srg2048::golay::DEFAULT_GENERATORS;
use srg2048::{Graph, Vec24, VertexSet};

/// All 4096 codewords, spanned from the text rows by plain XOR.
pub fn codewords() -> HashSet<u32> {
    let rows: Vec<u32> = DEFAULT_GENERATORS
        .iter()
        .map(|s| u32::from_str_radix(s, 2).unwrap())
        .collect();
    (0u32..1 << rows.len())
        .map(|mask| {
            rows.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0, |acc, (_, r)| acc ^ r)
        })
        .collect()
}

pub fn weight_census(words: &HashSet<u32>) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for w in words {
        *m.entry(w.count_ones()).or_insert(0) += 1;
    }
    m
}

/// Even-weight representatives, by direct enumeration.
pub fn representatives() -> Vec<u32> {
    let mut out = vec![0u32];
    for i in 0..24 {
        for j in i + 1..24 {
            out.push(1 << i | 1 << j);
        }
    }
    for a in 1..24 {
        for b in a + 1..24 {
            for c in b + 1..24 {
                out.push(1 | 1 << a | 1 << b | 1 << c);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Two cosets are adjacent iff a weight-2 vector maps one onto the other.
pub fn adjacent(words: &HashSet<u32>, x: u32, y: u32) -> bool {
    let z = x ^ y;
    if words.contains(&z) {
        return false;
    }
    (0..24).any(|i| (i + 1..24).any(|j| words.contains(&(z ^ 1 << i ^ 1 << j))))
}

pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> usize {
    let a: HashSet<u16> = g.neighbors(u).iter().copied().collect();
    g.neighbors(v).iter().filter(|w| a.contains(w)).count()
}

/// Pair invariant straight from its definition.
pub fn pair_invariant(g: &Graph, s: &VertexSet) -> u64 {
    let inside: HashSet<usize> = s.members().iter().copied().collect();
    let nbrs = |w: usize| g.neighbors(w).iter().map(|&x| x as usize);
    let w8: HashSet<usize> = (0..g.vertex_count())
        .filter(|w| !inside.contains(w))
        .filter(|&w| nbrs(w).filter(|x| inside.contains(x)).count() == 8)
        .collect();
    let m = s.members();
    let mut count = 0;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            let a: HashSet<usize> = nbrs(m[i]).filter(|w| w8.contains(w)).collect();
            if !nbrs(m[j]).any(|w| a.contains(&w)) {
                count += 1;
            }
        }
    }
    count
}

/// External profile straight from its definition.
pub fn profile(g: &Graph, s: &VertexSet) -> BTreeMap<usize, usize> {
    let inside: HashSet<usize> = s.members().iter().copied().collect();
    let mut m = BTreeMap::new();
    for w in (0..g.vertex_count()).filter(|w| !inside.contains(w)) {
        let d = g
            .neighbors(w)
            .iter()
            .filter(|&&x| inside.contains(&(x as usize)))
            .count();
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

pub fn is_maximal_coclique(g: &Graph, s: &VertexSet) -> bool {
    let inside: HashSet<usize> = s.members().iter().copied().collect();
    let independent = s.members().iter().all(|&u| {
        g.neighbors(u)
            .iter()
            .all(|&w| !inside.contains(&(w as usize)))
    });
    let dominating = (0..g.vertex_count()).all(|w| {
        inside.contains(&w)
            || g.neighbors(w)
                .iter()
                .any(|&x| inside.contains(&(x as usize)))
    });
    independent && dominating
}

/// Parses the GAP export back into adjacency lists and sets, 0-based.
pub struct GapFile {
    pub adjacency: Vec<Vec<usize>>,
    pub sets: Vec<Vec<usize>>,
    pub trailer: Vec<String>,
}

pub fn parse_gap(text: &str) -> GapFile {
    fn lists(block: &str) -> Vec<Vec<usize>> {
        block
            .lines()
            .map(|l| l.trim().trim_end_matches(','))
            .filter(|l| l.starts_with('['))
            .map(|l| {
                l.trim_matches(|c| c == '[' || c == ']')
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<usize>().unwrap() - 1)
                    .collect()
            })
            .collect()
    }
    let a_start = text.find("A:= [\n").expect("A block");
    let a_end = a_start + text[a_start..].find("];\n").expect("A end");
    let rest = &text[a_end + 3..];
    let (sets, tail) = if let Some(r) = rest.strip_prefix("MIS:= [];\n") {
        (Vec::new(), r)
    } else {
        let body = rest.strip_prefix("MIS:= [\n").expect("MIS block");
        let end = body.find("];\n").expect("MIS end");
        (lists(&body[..end]), &body[end + 3..])
    };
    GapFile {
        adjacency: lists(&text[a_start + 6..a_end]),
        sets,
        trailer: tail.lines().map(str::to_string).collect(),
    }
}

/// DAT bytes encoded by hand: size byte, then 3-byte little-endian words.
pub fn encode_dat(sets: &[Vec<u32>]) -> Vec<u8> {
    let mut out = Vec::new();
    for s in sets {
        out.push(s.len() as u8);
        for &x in s {
            out.extend_from_slice(&x.to_le_bytes()[..3]);
        }
    }
    out
}

pub fn vec24(x: u32) -> Vec24 {
    Vec24::new(x).unwrap()
}
