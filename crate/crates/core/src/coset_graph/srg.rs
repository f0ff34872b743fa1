//! Strongly regular parameters, exhaustive verification and the ratio bound.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::graph::Graph;

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// The parameters of the Golay coset graph.
pub const TARGET: SrgParams = SrgParams {
    v: 2048,
    k: 276,
    lambda: 44,
    mu: 36,
};

impl SrgParams {
    pub const fn new(v: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { v, k, lambda, mu }
    }

    /// Both sides of `k(k - λ - 1) = (v - k - 1)μ`.
    pub fn feasibility_sides(&self) -> (i128, i128) {
        let (v, k, l, m) = (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        (k * (k - l - 1), (v - k - 1) * m)
    }

    pub fn is_feasible(&self) -> bool {
        let (a, b) = self.feasibility_sides();
        a == b
    }

    /// Restricted eigenvalues `(r, s)`, the roots of
    /// `x^2 - (λ - μ)x - (k - μ) = 0`, with `r >= s`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let b = self.lambda as f64 - self.mu as f64;
        let c = self.k as f64 - self.mu as f64;
        let disc = (b * b + 4.0 * c).sqrt();
        ((b + disc) / 2.0, (b - disc) / 2.0)
    }

    /// The restricted eigenvalues when both are integers.
    pub fn integral_eigenvalues(&self) -> Option<(i64, i64)> {
        let b = self.lambda as i64 - self.mu as i64;
        let disc = b * b + 4 * (self.k as i64 - self.mu as i64);
        if disc < 0 {
            return None;
        }
        let root = disc.isqrt();
        if root * root != disc || (b + root) % 2 != 0 {
            return None;
        }
        Some(((b + root) / 2, (b - root) / 2))
    }

    /// Ratio bound on the independence number from the smallest eigenvalue.
    pub fn delsarte_bound(&self) -> u64 {
        match self.integral_eigenvalues() {
            Some((_, s)) if s < 0 => {
                delsarte_bound(self.v, self.k, s).expect("negative eigenvalue")
            }
            _ => delsarte_bound_real(self.v, self.k, self.eigenvalues().1)
                .expect("smallest eigenvalue of a regular graph is negative"),
        }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SrgError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has degree {degree}, vertex 0 has degree {expected}")]
    Degree {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error(
        "adjacent pair ({u}, {v}) has {found} common neighbours, expected lambda = {expected}"
    )]
    Lambda {
        u: usize,
        v: usize,
        found: u64,
        expected: u64,
    },
    #[error(
        "non-adjacent pair ({u}, {v}) has {found} common neighbours, expected mu = {expected}"
    )]
    Mu {
        u: usize,
        v: usize,
        found: u64,
        expected: u64,
    },
    #[error("ratio bound needs a negative eigenvalue, got {0}")]
    NonNegativeEigenvalue(f64),
}

/// Checks every pair of vertices and returns the parameters.
///
/// λ and μ are taken from the lexicographically first adjacent and
/// non-adjacent pair; every other pair must agree, and the first pair that
/// does not is returned as the witness. A graph without edges reports
/// λ = 0, a complete graph μ = 0.
pub fn verify_srg(g: &Graph, workers: usize) -> Result<SrgParams, SrgError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SrgError::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(SrgError::Degree {
            vertex,
            degree: g.degree(vertex),
            expected: k,
        });
    }

    let first = |adjacent: bool| {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| g.has_edge(u, v) == adjacent)
            .map_or(0, |(u, v)| g.common_neighbors(u, v) as u64)
    };
    let lambda = first(true);
    let mu = first(false);

    let violations: Vec<Option<SrgError>> = crate::with_workers(workers, || {
        (0..n)
            .into_par_iter()
            .map(|u| {
                let row = g.row(u);
                (u + 1..n).find_map(|v| {
                    let found = crate::bits::and_count(row, g.row(v)) as u64;
                    match crate::bits::get(row, v) {
                        true if found != lambda => Some(SrgError::Lambda {
                            u,
                            v,
                            found,
                            expected: lambda,
                        }),
                        false if found != mu => Some(SrgError::Mu {
                            u,
                            v,
                            found,
                            expected: mu,
                        }),
                        _ => None,
                    }
                })
            })
            .collect()
    });
    if let Some(e) = violations.into_iter().flatten().next() {
        return Err(e);
    }
    Ok(SrgParams::new(n as u64, k as u64, lambda, mu))
}

/// `floor(v / (1 + k / (-s)))` for an integral smallest eigenvalue `s < 0`,
/// in exact integer arithmetic.
pub fn delsarte_bound(v: u64, k: u64, s: i64) -> Result<u64, SrgError> {
    if s >= 0 {
        return Err(SrgError::NonNegativeEigenvalue(s as f64));
    }
    let neg = s.unsigned_abs() as u128;
    Ok((v as u128 * neg / (neg + k as u128)) as u64)
}

/// Ratio bound for a real smallest eigenvalue.
pub fn delsarte_bound_real(v: u64, k: u64, s: f64) -> Result<u64, SrgError> {
    if s >= 0.0 || s.is_nan() {
        return Err(SrgError::NonNegativeEigenvalue(s));
    }
    let bound = v as f64 / (1.0 + k as f64 / -s);
    // Absorb rounding just below an integral bound.
    Ok((bound + 1e-9).floor() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn five_cycle_is_srg() {
        assert_eq!(
            verify_srg(&cycle(5), 1).unwrap(),
            SrgParams::new(5, 2, 0, 1)
        );
    }

    #[test]
    fn six_cycle_is_not() {
        // (0, 2) share vertex 1; (0, 3) share none.
        assert_eq!(
            verify_srg(&cycle(6), 2).unwrap_err(),
            SrgError::Mu {
                u: 0,
                v: 3,
                found: 0,
                expected: 1
            }
        );
    }

    #[test]
    fn irregular_graph_names_vertex() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            verify_srg(&g, 1).unwrap_err(),
            SrgError::Degree {
                vertex: 1,
                degree: 2,
                expected: 1
            }
        );
    }

    #[test]
    fn petersen_graph() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner));
        let p = verify_srg(&g, 1).unwrap();
        assert_eq!(p, SrgParams::new(10, 3, 0, 1));
        assert_eq!(p.integral_eigenvalues(), Some((1, -2)));
        // Independence number of the Petersen graph is 4.
        assert_eq!(p.delsarte_bound(), 4);
    }

    #[test]
    fn target_feasibility_and_eigenvalues() {
        assert_eq!(TARGET.feasibility_sides(), (63756, 63756));
        assert!(TARGET.is_feasible());
        assert_eq!(TARGET.integral_eigenvalues(), Some((20, -12)));
        let (r, s) = TARGET.eigenvalues();
        assert_eq!((r, s), (20.0, -12.0));
        assert!(!SrgParams::new(2048, 276, 44, 35).is_feasible());
    }

    #[test]
    fn delsarte_values() {
        assert_eq!(delsarte_bound(2048, 276, -12).unwrap(), 85);
        assert_eq!(TARGET.delsarte_bound(), 85);
        assert!(delsarte_bound(2048, 276, 0).is_err());

        let c5 = SrgParams::new(5, 2, 0, 1);
        assert_eq!(c5.integral_eigenvalues(), None);
        let s = (-1.0 - 5f64.sqrt()) / 2.0;
        assert!((c5.eigenvalues().1 - s).abs() < 1e-12);
        assert_eq!(delsarte_bound_real(5, 2, s).unwrap(), 2);
        assert_eq!(c5.delsarte_bound(), 2);
        assert!(delsarte_bound_real(5, 2, 0.5).is_err());
    }
}
