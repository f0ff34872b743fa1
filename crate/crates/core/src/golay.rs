//! The extended binary Golay code.
//!
//! [`GolayCode::build`] spans twelve generator rows, then refuses anything
//! whose weight distribution is not `{0:1, 8:759, 12:2576, 16:759, 24:1}`.
//! Any such code is a coordinate permutation of the extended Golay code, so
//! the built-in generator matrix is just one valid choice among many.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gf2::{ParseVecError, Vec24};

/// Dimension of the code.
pub const DIMENSION: usize = 12;

/// Number of codewords, `2^12`.
pub const SIZE: usize = 1 << DIMENSION;

/// Number of weight-8 codewords (octads).
pub const OCTADS: usize = 759;

/// Weight enumerator of the extended Golay code.
pub const WEIGHT_DISTRIBUTION: [(u32, usize); 5] =
    [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];

/// Systematic generator matrix `[I | B]` of the built-in code.
pub const DEFAULT_GENERATORS: [&str; DIMENSION] = [
    "100000000000101011100011",
    "010000000000111110010010",
    "001000000000110100101011",
    "000100000000110001110110",
    "000010000000110011011001",
    "000001000000011001101101",
    "000000100000001100110111",
    "000000010000101101111000",
    "000000001000010110111100",
    "000000000100001011011110",
    "000000000010101110001101",
    "000000000001010111000111",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("expected 12 generator rows, found {0}")]
    RowCount(usize),
    #[error("generator row {row}: {source}")]
    Parse {
        row: usize,
        #[source]
        source: ParseVecError,
    },
    #[error(
        "generator rows are linearly dependent (span has {span} distinct words, expected 4096)"
    )]
    Dependent { span: usize },
    #[error("weight distribution mismatch at weight {weight}: expected {expected} codewords, found {found}")]
    WeightDistribution {
        weight: u32,
        expected: usize,
        found: usize,
    },
}

/// The 4096 codewords with constant-time membership.
#[derive(Clone)]
pub struct GolayCode {
    generators: [Vec24; DIMENSION],
    codewords: Vec<Vec24>,
    // One bit per vector of the ambient space: 2^24 bits.
    members: Vec<u64>,
    weight8: Vec<Vec24>,
}

impl std::fmt::Debug for GolayCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GolayCode")
            .field("generators", &self.generators)
            .field("codewords", &self.codewords.len())
            .finish_non_exhaustive()
    }
}

impl GolayCode {
    /// Builds the code from the built-in generator matrix.
    pub fn standard() -> GolayCode {
        let rows: Vec<Vec24> = DEFAULT_GENERATORS
            .iter()
            .map(|s| s.parse().expect("built-in generator row"))
            .collect();
        GolayCode::build(&rows).expect("built-in generator matrix spans the Golay code")
    }

    /// Parses a generator file: twelve rows of 24 binary digits.
    ///
    /// Blank lines and lines starting with `#` are skipped. Rows are
    /// numbered from 1 in errors.
    pub fn from_generator_text(text: &str) -> Result<GolayCode, CodeError> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, l)| {
                l.parse::<Vec24>()
                    .map_err(|source| CodeError::Parse { row: i + 1, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        GolayCode::build(&rows)
    }

    pub fn build(generators: &[Vec24]) -> Result<GolayCode, CodeError> {
        let generators: [Vec24; DIMENSION] = generators
            .try_into()
            .map_err(|_| CodeError::RowCount(generators.len()))?;

        let mut codewords = Vec::with_capacity(SIZE);
        codewords.push(Vec24::ZERO);
        for g in generators {
            for i in 0..codewords.len() {
                codewords.push(codewords[i] + g);
            }
        }
        codewords.sort_unstable();
        codewords.dedup();
        if codewords.len() != SIZE {
            return Err(CodeError::Dependent {
                span: codewords.len(),
            });
        }

        let found = census(&codewords);
        let expected: BTreeMap<u32, usize> = WEIGHT_DISTRIBUTION.into_iter().collect();
        let weights: std::collections::BTreeSet<u32> =
            found.keys().chain(expected.keys()).copied().collect();
        for weight in weights {
            let (e, f) = (
                expected.get(&weight).copied().unwrap_or(0),
                found.get(&weight).copied().unwrap_or(0),
            );
            if e != f {
                return Err(CodeError::WeightDistribution {
                    weight,
                    expected: e,
                    found: f,
                });
            }
        }

        let mut members = vec![0u64; (1 << 24) / 64];
        for c in &codewords {
            let b = c.bits() as usize;
            members[b >> 6] |= 1 << (b & 63);
        }
        let weight8 = codewords
            .iter()
            .copied()
            .filter(|c| c.weight() == 8)
            .collect();

        Ok(GolayCode {
            generators,
            codewords,
            members,
            weight8,
        })
    }

    pub fn generators(&self) -> &[Vec24; DIMENSION] {
        &self.generators
    }

    /// All codewords in ascending encoding order.
    pub fn codewords(&self) -> &[Vec24] {
        &self.codewords
    }

    /// The 759 weight-8 codewords in ascending encoding order.
    pub fn weight8(&self) -> &[Vec24] {
        &self.weight8
    }

    #[inline]
    pub fn contains(&self, x: Vec24) -> bool {
        let b = x.bits() as usize;
        (self.members[b >> 6] >> (b & 63)) & 1 == 1
    }

    /// Exact count of codewords per weight.
    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        census(&self.codewords)
    }

    /// 12-bit syndrome: bit `i` is `<x, g_i>` for generator row `i`.
    ///
    /// The code is doubly even, hence self-dual, so its generators also
    /// form a parity-check basis: `syndrome(x) == 0` iff `x` is a codeword,
    /// and two vectors share a syndrome iff they lie in the same coset.
    #[inline]
    pub fn syndrome(&self, x: Vec24) -> u16 {
        self.generators
            .iter()
            .enumerate()
            .fold(0u16, |s, (i, g)| s | (u16::from(x.dot(*g)) << i))
    }

    /// Whether the coordinate permutation `p` (bit `i` to bit `p[i]`) maps
    /// the code onto itself.
    pub fn preserves(&self, p: &[usize; 24]) -> bool {
        self.generators.iter().all(|g| self.contains(g.permute(p)))
    }
}

/// A few coordinate permutations of small order from the projective action
/// of PSL(2, 23), with bit 0 as the point at infinity and bit `i` as
/// `i mod 23`. The default generators are the extended quadratic-residue
/// code in this labelling, so all of these preserve it; other generator
/// matrices should be checked with [`GolayCode::preserves`].
///
/// Orders are 2, 3, 4, 6 and 12, one per entry.
pub fn residue_permutations() -> Vec<[usize; 24]> {
    // (a b; c d) with ad - bc = 1 and trace 0, 1, 5, 7, 3.
    const MATRICES: [[i64; 4]; 5] = [
        [0, -1, 1, 0],
        [0, -1, 1, 1],
        [5, -1, 1, 0],
        [7, -1, 1, 0],
        [3, -1, 1, 0],
    ];
    MATRICES.iter().map(|&m| mobius(m)).collect()
}

fn mobius([a, b, c, d]: [i64; 4]) -> [usize; 24] {
    const Q: i64 = 23;
    let inverse = |x: i64| (1..Q).find(|&y| x * y % Q == 1).expect("unit");
    let to_bit = |y: Option<i64>| match y {
        None => 0,
        Some(0) => 23,
        Some(y) => y as usize,
    };
    std::array::from_fn(|bit| {
        let image = match bit {
            0 if c.rem_euclid(Q) == 0 => None,
            0 => Some(a * inverse(c.rem_euclid(Q))),
            _ => {
                let y = bit as i64 % Q;
                let den = (c * y + d).rem_euclid(Q);
                (den != 0).then(|| (a * y + b) * inverse(den))
            }
        };
        to_bit(image.map(|y| y.rem_euclid(Q)))
    })
}

fn census(words: &[Vec24]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for w in words {
        *out.entry(w.weight()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::OnceLock;

    fn code() -> &'static GolayCode {
        static CODE: OnceLock<GolayCode> = OnceLock::new();
        CODE.get_or_init(GolayCode::standard)
    }

    fn default_rows() -> Vec<Vec24> {
        DEFAULT_GENERATORS
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }

    #[test]
    fn default_weight_distribution() {
        let dist = code().weight_distribution();
        assert_eq!(dist, WEIGHT_DISTRIBUTION.into_iter().collect());
        assert_eq!(dist.values().sum::<usize>(), 4096);
        assert!(dist.keys().all(|w| w % 2 == 0));
        assert_eq!(code().weight8().len(), OCTADS);
        assert_eq!(code().codewords().len(), SIZE);
    }

    #[test]
    fn membership_basics() {
        let c = code();
        assert!(c.contains(Vec24::ZERO));
        assert!(c.contains(Vec24::ALL_ONES));
        for i in 0..24 {
            for j in i + 1..24 {
                assert!(!c.contains(Vec24::from_support([i, j])));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let a = c.codewords()[rng.random_range(0..SIZE)];
            let b = c.codewords()[rng.random_range(0..SIZE)];
            assert!(c.contains(a + b));
        }
    }

    #[test]
    fn no_nonzero_word_below_eight() {
        assert!(code()
            .codewords()
            .iter()
            .all(|c| *c == Vec24::ZERO || c.weight() >= 8));
    }

    // Independent membership route: Gaussian elimination against the
    // generator rows.
    fn in_span(rows: &[Vec24], x: Vec24) -> bool {
        let mut basis: Vec<u32> = Vec::new();
        for r in rows {
            let mut v = r.bits();
            for b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let mut v = x.bits();
        for b in &basis {
            v = v.min(v ^ b);
        }
        v == 0
    }

    #[test]
    fn membership_matches_linear_algebra() {
        let rows = default_rows();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut hits = 0;
        for i in 0..10_000 {
            // Mix uniform vectors with perturbed codewords so both answers occur.
            let x = if i % 2 == 0 {
                Vec24::new(rng.random_range(0..1 << 24)).unwrap()
            } else {
                let c = code().codewords()[rng.random_range(0..SIZE)];
                let flip = if rng.random_bool(0.5) {
                    0
                } else {
                    1 << rng.random_range(0..24)
                };
                Vec24::new(c.bits() ^ flip).unwrap()
            };
            let member = code().contains(x);
            assert_eq!(member, in_span(&rows, x), "{x}");
            hits += member as usize;
        }
        assert!(hits > 1000);
    }

    #[test]
    fn syndrome_detects_codewords() {
        let c = code();
        assert!(c.codewords().iter().all(|w| c.syndrome(*w) == 0));
        assert_ne!(c.syndrome(Vec24::from_support([0, 1])), 0);
    }

    #[test]
    fn repeated_row_is_dependent() {
        let mut rows = default_rows();
        rows[11] = rows[0];
        assert_eq!(
            GolayCode::build(&rows).unwrap_err(),
            CodeError::Dependent { span: 2048 }
        );
    }

    #[test]
    fn wrong_row_count() {
        let rows = default_rows();
        assert_eq!(
            GolayCode::build(&rows[..11]).unwrap_err(),
            CodeError::RowCount(11)
        );
    }

    #[test]
    fn corrupted_row_fails_weight_check() {
        let mut rows = default_rows();
        rows[3] = rows[3] + Vec24::from_support([0]);
        match GolayCode::build(&rows).unwrap_err() {
            CodeError::WeightDistribution { .. } => {}
            e => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn generator_text_parsing() {
        let text = format!("# default\n\n{}\n", DEFAULT_GENERATORS.join("\n"));
        let parsed = GolayCode::from_generator_text(&text).unwrap();
        assert_eq!(parsed.codewords(), code().codewords());

        let bad = DEFAULT_GENERATORS.join("\n").replacen('1', "2", 1);
        match GolayCode::from_generator_text(&bad).unwrap_err() {
            CodeError::Parse { row: 1, source } => {
                assert_eq!(
                    source,
                    ParseVecError::Char {
                        position: 1,
                        found: '2'
                    }
                )
            }
            e => panic!("unexpected error {e}"),
        }
    }

    fn order(p: &[usize; 24]) -> usize {
        let mut x: [usize; 24] = std::array::from_fn(|i| p[i]);
        let mut k = 1;
        while x.iter().enumerate().any(|(i, &y)| i != y) {
            x = std::array::from_fn(|i| p[x[i]]);
            k += 1;
        }
        k
    }

    #[test]
    fn residue_permutations_preserve_default_code() {
        let perms = residue_permutations();
        let orders: Vec<usize> = perms.iter().map(order).collect();
        assert_eq!(orders, vec![2, 3, 4, 6, 12]);
        for p in &perms {
            let mut seen = [false; 24];
            p.iter().for_each(|&i| seen[i] = true);
            assert!(seen.iter().all(|&b| b), "not a permutation: {p:?}");
            assert!(code().preserves(p));
        }
        // A transposition never preserves a code of minimum distance 8.
        let mut swap: [usize; 24] = std::array::from_fn(|i| i);
        swap.swap(0, 1);
        assert!(!code().preserves(&swap));
    }
}
