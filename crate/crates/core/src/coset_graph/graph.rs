use rayon::prelude::*;

use crate::bits;
use crate::golay::GolayCode;

use super::adjacency::{classify, AdjacencyStats};
use super::reps::CosetReps;
use super::GraphError;

/// Degree of every vertex of the coset graph.
pub const DEGREE: usize = 276;

/// Simple undirected graph stored as bitset rows plus sorted neighbor lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    neighbors: Vec<Vec<u16>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish_non_exhaustive()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are
    /// ignored.
    ///
    /// Panics if an endpoint is out of range or `n` exceeds `u16` indexing.
    pub fn from_edges<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(n <= usize::from(u16::MAX), "too many vertices: {n}");
        let words = bits::words_for(n);
        let mut rows = vec![0u64; n * words];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            if u != v {
                bits::set(&mut rows[u * words..(u + 1) * words], v);
                bits::set(&mut rows[v * words..(v + 1) * words], u);
            }
        }
        let neighbors = (0..n)
            .map(|u| {
                bits::ones(&rows[u * words..(u + 1) * words])
                    .map(|v| v as u16)
                    .collect()
            })
            .collect();
        Graph {
            n,
            words,
            rows,
            neighbors,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of `u64` words in each row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency bitset of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    /// Sorted neighbors of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[u16] {
        &self.neighbors[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> u32 {
        bits::and_count(self.row(u), self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

/// Builds the coset graph, deciding every pair by the case analysis.
pub fn build_graph(
    code: &GolayCode,
    reps: &CosetReps,
    workers: usize,
) -> Result<Graph, GraphError> {
    build_graph_with_stats(code, reps, workers).map(|(g, _)| g)
}

/// Like [`build_graph`], also returning how each pair was decided.
///
/// The result does not depend on `workers`; `0` means one worker per core.
pub fn build_graph_with_stats(
    code: &GolayCode,
    reps: &CosetReps,
    workers: usize,
) -> Result<(Graph, AdjacencyStats), GraphError> {
    let n = reps.len();
    let upper: Vec<(Vec<(usize, usize)>, AdjacencyStats)> = crate::with_workers(workers, || {
        (0..n)
            .into_par_iter()
            .map(|u| {
                let x = reps.rep(u);
                let mut edges = Vec::new();
                let mut stats = AdjacencyStats::default();
                for v in u + 1..n {
                    let d = classify(code, x, reps.rep(v))?;
                    stats.record(d);
                    if d.adjacent() {
                        edges.push((u, v));
                    }
                }
                Ok((edges, stats))
            })
            .collect::<Vec<Result<_, GraphError>>>()
    })
    // Sequential collect so the reported error is the lowest vertex's.
    .into_iter()
    .collect::<Result<_, _>>()?;

    let stats = upper
        .iter()
        .fold(AdjacencyStats::default(), |acc, (_, s)| acc.merge(*s));
    let graph = Graph::from_edges(n, upper.into_iter().flat_map(|(e, _)| e));
    if let Some(vertex) = (0..n).find(|&u| graph.degree(u) != DEGREE) {
        return Err(GraphError::Degree {
            vertex,
            degree: graph.degree(vertex),
            expected: DEGREE,
        });
    }
    Ok((graph, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_fixture() {
        let g = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.neighbors(0), &[1, 4]);
        assert!(g.has_edge(4, 0) && !g.has_edge(0, 2));
        assert_eq!(g.common_neighbors(0, 2), 1);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn loops_and_duplicates_ignored() {
        let g = Graph::from_edges(3, [(0, 0), (0, 1), (1, 0)]);
        assert_eq!(g.edge_count(), 1);
        assert!(!g.has_edge(0, 0));
    }
}
