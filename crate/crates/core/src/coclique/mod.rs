//! Cocliques (independent sets) of a graph: membership checks, the
//! histogram of outside vertices by neighbors inside the set, and the pair
//! invariant used to tell size-72 cocliques apart.

mod search;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bits;
use crate::coset_graph::Graph;

pub use search::{search_maximal, SearchConfig, SearchOutcome, DEFAULT_SEED};

/// No coclique of the srg(2048, 276, 44, 36) exceeds this size.
pub const DELSARTE_LIMIT: usize = 85;

/// Reference values of the pair invariant for the four size-72 cocliques
/// reported in the literature. Two of them share the value 166.
pub const KNOWN_PAIR_INVARIANTS_72: [u64; 3] = [166, 276, 336];

/// External profile reported for every size-72 maximal coclique examined
/// so far.
pub const KNOWN_PROFILE_72: [(usize, usize); 3] = [(8, 480), (10, 960), (12, 536)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocliqueError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    Duplicate(usize),
    #[error("vertices {0} and {1} are adjacent, not a coclique")]
    NotCoclique(usize, usize),
}

/// Strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Sorts `members`; rejects duplicates and indices `>= n`.
    pub fn new<I: IntoIterator<Item = usize>>(
        members: I,
        n: usize,
    ) -> Result<VertexSet, CocliqueError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(CocliqueError::Duplicate(w[0]));
        }
        if let Some(&vertex) = members.last().filter(|&&v| v >= n) {
            return Err(CocliqueError::OutOfRange { vertex, n });
        }
        Ok(VertexSet { members })
    }

    pub fn empty() -> VertexSet {
        VertexSet {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Membership bitset over `n` vertices.
    pub fn mask(&self, n: usize) -> Vec<u64> {
        let mut m = vec![0u64; bits::words_for(n)];
        for &v in &self.members {
            bits::set(&mut m, v);
        }
        m
    }
}

/// First adjacent pair inside `s`, if any.
pub fn find_edge(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    let mask = s.mask(g.vertex_count());
    s.members().iter().find_map(|&u| {
        bits::ones(g.row(u))
            .find(|&v| bits::get(&mask, v))
            .map(|v| (u.min(v), u.max(v)))
    })
}

pub fn is_coclique(g: &Graph, s: &VertexSet) -> bool {
    find_edge(g, s).is_none()
}

/// Whether the coclique `s` cannot be extended by any vertex.
pub fn is_maximal(g: &Graph, s: &VertexSet) -> Result<bool, CocliqueError> {
    if let Some((u, v)) = find_edge(g, s) {
        return Err(CocliqueError::NotCoclique(u, v));
    }
    let mut covered = s.mask(g.vertex_count());
    for &u in s.members() {
        for (c, r) in covered.iter_mut().zip(g.row(u)) {
            *c |= r;
        }
    }
    Ok(bits::count(&covered) as usize == g.vertex_count())
}

/// Histogram over vertices outside a set of their neighbor count inside it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExternalProfile {
    counts: BTreeMap<usize, usize>,
}

impl ExternalProfile {
    /// Number of outside vertices with exactly `d` neighbors in the set.
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Nonzero entries `(d, count)` in ascending `d`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// Number of outside vertices.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Edges leaving the set.
    pub fn weighted_sum(&self) -> usize {
        self.entries().map(|(d, c)| d * c).sum()
    }

    pub fn matches(&self, expected: &[(usize, usize)]) -> bool {
        self.entries().eq(expected.iter().copied())
    }
}

impl fmt::Display for ExternalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, c)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        Ok(())
    }
}

pub fn external_profile(g: &Graph, s: &VertexSet) -> ExternalProfile {
    let mask = s.mask(g.vertex_count());
    let mut counts = BTreeMap::new();
    for w in (0..g.vertex_count()).filter(|&w| !bits::get(&mask, w)) {
        *counts
            .entry(bits::and_count(g.row(w), &mask) as usize)
            .or_insert(0) += 1;
    }
    ExternalProfile { counts }
}

/// Number of 2-subsets `{u, v}` of `s` with no common neighbor among the
/// outside vertices that have exactly 8 neighbors in `s`.
pub fn pair_invariant(g: &Graph, s: &VertexSet) -> u64 {
    let n = g.vertex_count();
    let mask = s.mask(n);
    let mut w8 = vec![0u64; bits::words_for(n)];
    for w in (0..n).filter(|&w| !bits::get(&mask, w)) {
        if bits::and_count(g.row(w), &mask) == 8 {
            bits::set(&mut w8, w);
        }
    }
    let m = s.members();
    let mut count = 0;
    for (i, &u) in m.iter().enumerate() {
        for &v in &m[i + 1..] {
            if bits::and3_count(g.row(u), g.row(v), &w8) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Result of checking one vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetReport {
    pub size: usize,
    /// First internal edge, if the set is not a coclique.
    pub edge: Option<(usize, usize)>,
    pub maximal: bool,
    pub profile: ExternalProfile,
    pub pair_invariant: Option<u64>,
}

impl SetReport {
    pub fn is_maximal_coclique(&self) -> bool {
        self.edge.is_none() && self.maximal
    }
}

/// Checks `s` and computes its profile; the pair invariant is computed
/// only when `|s| >= pair_threshold`.
pub fn check_set(g: &Graph, s: &VertexSet, pair_threshold: usize) -> SetReport {
    let edge = find_edge(g, s);
    let maximal = edge.is_none() && is_maximal(g, s).unwrap_or(false);
    SetReport {
        size: s.len(),
        edge,
        maximal,
        profile: external_profile(g, s),
        pair_invariant: (edge.is_none() && s.len() >= pair_threshold).then(|| pair_invariant(g, s)),
    }
}
