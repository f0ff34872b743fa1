//! Seeded randomized search for maximal cocliques across a size range.
//!
//! Each restart draws a bias in `[-1, 1]` and grows a coclique until it is
//! maximal. At every step, with probability `|bias|`, the next vertex is one
//! of the free vertices with the fewest (bias > 0) or most (bias < 0) free
//! neighbors, otherwise a uniformly random free vertex. Positive bias drifts
//! toward large cocliques, negative bias toward small ones. The restart then
//! performs plateau moves: drop one or two members, re-extend, and keep the
//! result unless it moved against the bias.
//!
//! Sizes still missing afterwards get two more phases. The orbit phase
//! grows cocliques that are unions of orbits of a graph automorphism, which
//! reaches the smallest sizes far more easily than unstructured moves. The
//! fixed-size phase is a swap local search over cocliques of one size.
//!
//! Every set is re-verified through [`is_coclique`](super::is_coclique) and
//! [`is_maximal`](super::is_maximal) before it is kept.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits;
use crate::coset_graph::Graph;

use super::{external_profile, is_coclique, is_maximal, VertexSet, DELSARTE_LIMIT};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_480_276;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Sizes to collect one maximal coclique for.
    pub sizes: RangeInclusive<usize>,
    /// Maximal cocliques to construct in total, split across workers.
    pub budget: u64,
    pub seed: u64,
    /// Independent RNG streams, one per rayon task. Results depend on this
    /// value but not on scheduling.
    pub workers: usize,
    /// Plateau moves after each restart.
    pub plateau_moves: u32,
    /// Moves of the fixed-size local search, per target size the greedy
    /// phase missed.
    pub fixed_size_moves: u64,
    /// Upper bound on coclique size; exceeding it means the graph is wrong.
    pub size_bound: usize,
    /// Vertex permutations that are automorphisms of the graph, each
    /// generating a cyclic group for the orbit phase. See
    /// [`CosetGraph::residue_symmetries`](crate::CosetGraph::residue_symmetries).
    pub symmetries: Vec<Vec<usize>>,
    /// Orbit-phase constructions per symmetry.
    pub orbit_restarts: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            sizes: 20..=40,
            budget: 20_000,
            seed: DEFAULT_SEED,
            workers: 1,
            plateau_moves: 40,
            fixed_size_moves: 20_000,
            size_bound: DELSARTE_LIMIT,
            symmetries: Vec::new(),
            orbit_restarts: 2_000,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    /// One verified maximal coclique per achieved target size, ascending.
    pub sets: Vec<VertexSet>,
    /// Number of maximal cocliques constructed.
    pub constructed: u64,
    /// How often each size occurred, over all constructed cocliques.
    pub sizes_seen: BTreeMap<usize, u64>,
    /// Largest verified maximal coclique seen, in range or not.
    pub largest: Option<VertexSet>,
}

impl SearchOutcome {
    /// Target sizes with no coclique found.
    pub fn missing(&self, sizes: RangeInclusive<usize>) -> Vec<usize> {
        sizes
            .filter(|&s| !self.sets.iter().any(|v| v.len() == s))
            .collect()
    }
}

/// Searches `g` for maximal cocliques of every size in `config.sizes`.
///
/// Stops early once every target size has been found. Deterministic for a
/// fixed `(seed, workers)`.
pub fn search_maximal(g: &Graph, config: &SearchConfig) -> SearchOutcome {
    let streams = config.workers.max(1);
    let share = |i: usize| {
        config.budget / streams as u64 + u64::from((i as u64) < config.budget % streams as u64)
    };
    let runs: Vec<StreamResult> = crate::with_workers(streams, || {
        (0..streams)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                rng.set_stream(i as u64);
                Stream::new(g, config, rng).run(share(i))
            })
            .collect()
    });

    // Keep, per size, the earliest find by (step, stream).
    let mut best: BTreeMap<usize, (u64, usize, VertexSet)> = BTreeMap::new();
    let mut out = SearchOutcome::default();
    for (stream, run) in runs.into_iter().enumerate() {
        out.constructed += run.constructed;
        for (size, n) in run.sizes_seen {
            *out.sizes_seen.entry(size).or_insert(0) += n;
        }
        for (step, set) in run.found {
            let key = (step, stream);
            match best.get(&set.len()) {
                Some((s, t, _)) if (*s, *t) <= key => {}
                _ => {
                    best.insert(set.len(), (step, stream, set));
                }
            }
        }
        if let Some(l) = run.largest {
            if out.largest.as_ref().is_none_or(|cur| l.len() > cur.len()) {
                out.largest = Some(l);
            }
        }
    }
    out.sets = best.into_values().map(|(_, _, s)| s).collect();
    out
}

struct StreamResult {
    found: Vec<(u64, VertexSet)>,
    constructed: u64,
    sizes_seen: BTreeMap<usize, u64>,
    largest: Option<VertexSet>,
}

struct Stream<'a> {
    g: &'a Graph,
    config: &'a SearchConfig,
    rng: ChaCha8Rng,
    members: Vec<usize>,
    in_set: Vec<u64>,
    // Vertices outside the set with no neighbor in it.
    free: Vec<u64>,
    cover: Vec<u16>,
    found: BTreeMap<usize, (u64, VertexSet)>,
    sizes_seen: BTreeMap<usize, u64>,
    largest: Option<VertexSet>,
    step: u64,
}

impl<'a> Stream<'a> {
    fn new(g: &'a Graph, config: &'a SearchConfig, rng: ChaCha8Rng) -> Self {
        let n = g.vertex_count();
        Stream {
            g,
            config,
            rng,
            members: Vec::new(),
            in_set: vec![0; bits::words_for(n)],
            free: vec![0; bits::words_for(n)],
            cover: vec![0; n],
            found: BTreeMap::new(),
            sizes_seen: BTreeMap::new(),
            largest: None,
            step: 0,
        }
    }

    fn run(mut self, budget: u64) -> StreamResult {
        let targets = self.config.sizes.clone().count();
        'restarts: while self.step < budget && self.found.len() < targets {
            let bias: f64 = self.rng.random_range(-1.0..=1.0);
            self.reset();
            self.extend(bias);
            self.record();
            for _ in 0..self.config.plateau_moves {
                if self.step >= budget || self.found.len() >= targets {
                    break 'restarts;
                }
                let before = self.members.clone();
                let drop = self.rng.random_range(1..=2).min(self.members.len());
                for _ in 0..drop {
                    let i = self.rng.random_range(0..self.members.len());
                    let v = self.members.swap_remove(i);
                    self.remove(v);
                }
                self.extend(bias);
                self.record();
                let worse = if bias >= 0.0 {
                    self.members.len() < before.len()
                } else {
                    self.members.len() > before.len()
                };
                if worse {
                    self.restore(&before);
                }
            }
        }
        for perm in &self.config.symmetries {
            if self.found.len() >= targets {
                break;
            }
            self.orbits(perm, targets);
        }
        let missing: Vec<usize> = self
            .config
            .sizes
            .clone()
            .filter(|s| !self.found.contains_key(s))
            .collect();
        for size in missing {
            self.fixed_size(size);
        }
        StreamResult {
            found: self.found.into_values().collect(),
            constructed: self.step,
            sizes_seen: self.sizes_seen,
            largest: self.largest,
        }
    }

    /// Greedy constructions that add whole orbits of the group generated by
    /// `perm`. The next orbit is, with probability drawn per restart, the one
    /// dominating the most new vertices per member (with noise), otherwise a
    /// random one. If `perm` is an automorphism the result is maximal as
    /// built; a final `extend` covers the case where it is not.
    fn orbits(&mut self, perm: &[usize], targets: usize) {
        let n = self.g.vertex_count();
        assert_eq!(perm.len(), n, "symmetry must permute every vertex");
        let mut seen = vec![false; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let mut orbit = Vec::new();
            let mut w = v;
            while !seen[w] {
                seen[w] = true;
                orbit.push(w);
                w = perm[w];
            }
            if !orbit.is_empty() {
                orbits.push(orbit);
            }
        }
        // Orbits that are cocliques, with their closed neighborhoods.
        let words = bits::words_for(n);
        let usable: Vec<(&[usize], Vec<u64>)> = orbits
            .iter()
            .filter(|o| o.iter().all(|&a| o.iter().all(|&b| !self.g.has_edge(a, b))))
            .map(|o| {
                let mut reach = vec![0u64; words];
                for &v in o {
                    bits::set(&mut reach, v);
                    for (r, x) in reach.iter_mut().zip(self.g.row(v)) {
                        *r |= x;
                    }
                }
                (o.as_slice(), reach)
            })
            .collect();

        for _ in 0..self.config.orbit_restarts {
            if self.found.len() >= targets {
                return;
            }
            let greed: f64 = self.rng.random();
            self.reset();
            loop {
                let open: Vec<usize> = (0..usable.len())
                    .filter(|&i| usable[i].0.iter().all(|&v| bits::get(&self.free, v)))
                    .collect();
                if open.is_empty() {
                    break;
                }
                let pick = if self.rng.random_bool(greed) {
                    let mut best = (f64::MIN, open[0]);
                    for &i in &open {
                        let (orbit, reach) = &usable[i];
                        let fresh = bits::and_count(reach, &self.free) as f64 / orbit.len() as f64;
                        let score = fresh + 3.0 * self.rng.random::<f64>();
                        if score > best.0 {
                            best = (score, i);
                        }
                    }
                    best.1
                } else {
                    *open.choose(&mut self.rng).expect("non-empty")
                };
                for &v in usable[pick].0 {
                    self.add(v);
                }
            }
            self.extend(0.0);
            self.record();
        }
    }

    /// Local search over independent sets of exactly `size` members for one
    /// that dominates every vertex. Returns whether one was found.
    ///
    /// A move swaps a member `u` for an outside vertex whose only neighbor
    /// in the set is `u` (or which has none), so the set stays independent;
    /// the swap leaving the fewest undominated vertices wins, ties broken at
    /// random. Vertices that just entered or left the set are tabu for a few
    /// moves. After `RESTART_AFTER` moves without a new best the search
    /// starts over from a fresh fill.
    fn fixed_size(&mut self, size: usize) -> bool {
        const TABU: u64 = 3;
        const RESTART_AFTER: u64 = 5_000;
        let n = self.g.vertex_count();
        let words = bits::words_for(n);

        let mut entered = vec![0u64; n];
        let mut left = vec![0u64; n];
        let mut lost = vec![0u64; words];
        let mut reach = vec![0u64; words];
        let mut moves: Vec<(u32, usize, usize)> = Vec::new();
        let mut best = u32::MAX;
        let mut last_gain = 0;
        let mut fills = 0u64;

        for it in 1..=self.config.fixed_size_moves {
            if it == 1 || it - last_gain > RESTART_AFTER {
                if !self.fill(size, fills == 0) {
                    return false;
                }
                fills += 1;
                best = u32::MAX;
                last_gain = it;
            }
            let free_count = bits::count(&self.free);
            if free_count == 0 {
                self.record();
                return true;
            }
            if free_count < best {
                best = free_count;
                last_gain = it;
            }

            moves.clear();
            let free: Vec<usize> = bits::ones(&self.free).collect();
            let sample: Vec<usize> = free.choose_multiple(&mut self.rng, 8).copied().collect();
            for (i, &u) in self.members.iter().enumerate() {
                if it - entered[u] <= TABU {
                    continue;
                }
                // Vertices only `u` dominates, `u` included.
                lost.fill(0);
                bits::set(&mut lost, u);
                for &w in self.g.neighbors(u) {
                    if self.cover[w as usize] == 1 {
                        bits::set(&mut lost, w as usize);
                    }
                }
                let after_removal = free_count + bits::count(&lost);
                for ((r, f), l) in reach.iter_mut().zip(&self.free).zip(&lost) {
                    *r = f | l;
                }
                let mut consider = |v: usize| {
                    if it - left[v] > TABU {
                        let covered = bits::and_count(self.g.row(v), &reach) + 1;
                        moves.push((after_removal - covered, i, v));
                    }
                };
                for &v in &sample {
                    consider(v);
                }
                for &v in self.g.neighbors(u) {
                    if self.cover[v as usize] == 1 {
                        consider(v as usize);
                    }
                }
            }
            let Some(low) = moves.iter().map(|m| m.0).min() else {
                continue;
            };
            let ties: Vec<&(u32, usize, usize)> = moves.iter().filter(|m| m.0 == low).collect();
            let &&(_, i, v) = ties.choose(&mut self.rng).expect("non-empty");
            let u = self.members.swap_remove(i);
            self.remove(u);
            left[u] = it;
            self.add(v);
            entered[v] = it;
        }
        false
    }

    /// Grows a coclique from scratch to exactly `size` members, retrying
    /// with fresh random biases; the first attempt, if `greedy`, always
    /// takes the vertex dominating the most.
    fn fill(&mut self, size: usize, greedy: bool) -> bool {
        const ATTEMPTS: usize = 200;
        for attempt in 0..ATTEMPTS {
            let bias: f64 = if greedy && attempt == 0 {
                -1.0
            } else {
                self.rng.random_range(-1.0..=1.0)
            };
            self.reset();
            while self.members.len() < size && bits::count(&self.free) > 0 {
                let v = self.pick(bias);
                self.add(v);
            }
            if self.members.len() == size {
                return true;
            }
        }
        false
    }

    fn restore(&mut self, members: &[usize]) {
        self.reset();
        for &v in members {
            self.add(v);
        }
    }

    fn reset(&mut self) {
        let n = self.g.vertex_count();
        self.members.clear();
        self.in_set.fill(0);
        self.cover.fill(0);
        self.free.fill(0);
        for v in 0..n {
            bits::set(&mut self.free, v);
        }
    }

    fn add(&mut self, v: usize) {
        debug_assert!(bits::get(&self.free, v));
        self.members.push(v);
        bits::set(&mut self.in_set, v);
        bits::clear(&mut self.free, v);
        for &w in self.g.neighbors(v) {
            let w = w as usize;
            self.cover[w] += 1;
            if self.cover[w] == 1 {
                bits::clear(&mut self.free, w);
            }
        }
    }

    // Caller has already taken `v` out of `members`.
    fn remove(&mut self, v: usize) {
        bits::clear(&mut self.in_set, v);
        for &w in self.g.neighbors(v) {
            let w = w as usize;
            self.cover[w] -= 1;
            if self.cover[w] == 0 && !bits::get(&self.in_set, w) {
                bits::set(&mut self.free, w);
            }
        }
        if self.cover[v] == 0 {
            bits::set(&mut self.free, v);
        }
    }

    fn extend(&mut self, bias: f64) {
        while bits::count(&self.free) > 0 {
            let v = self.pick(bias);
            self.add(v);
        }
    }

    /// Chooses a free vertex. With probability `|bias|` it is one with the
    /// fewest (bias > 0) or most (bias < 0) free neighbors, otherwise any.
    fn pick(&mut self, bias: f64) -> usize {
        let candidates: Vec<usize> = bits::ones(&self.free).collect();
        if !self.rng.random_bool(bias.abs()) {
            return *candidates.choose(&mut self.rng).expect("free vertex");
        }
        let scored: Vec<(u32, usize)> = candidates
            .iter()
            .map(|&v| (bits::and_count(self.g.row(v), &self.free), v))
            .collect();
        let scores = scored.iter().map(|s| s.0);
        let target = if bias >= 0.0 {
            scores.min()
        } else {
            scores.max()
        }
        .expect("free vertex");
        let ties: Vec<usize> = scored
            .into_iter()
            .filter(|s| s.0 == target)
            .map(|s| s.1)
            .collect();
        *ties.choose(&mut self.rng).expect("non-empty")
    }

    fn record(&mut self) {
        self.step += 1;
        let size = self.members.len();
        *self.sizes_seen.entry(size).or_insert(0) += 1;
        let wanted = self.config.sizes.contains(&size) && !self.found.contains_key(&size);
        let bigger = self.largest.as_ref().is_none_or(|l| size > l.len());
        if !wanted && !bigger {
            return;
        }
        let set = self.verified();
        if wanted {
            self.found.insert(size, (self.step, set.clone()));
        }
        if bigger {
            self.largest = Some(set);
        }
    }

    // Checks the current set through the independent checking path.
    fn verified(&self) -> VertexSet {
        let n = self.g.vertex_count();
        let set =
            VertexSet::new(self.members.iter().copied(), n).expect("search keeps a proper set");
        assert!(
            set.len() <= self.config.size_bound,
            "coclique of size {} exceeds the bound {}",
            set.len(),
            self.config.size_bound
        );
        assert!(is_coclique(self.g, &set), "search produced a non-coclique");
        assert!(
            is_maximal(self.g, &set).expect("coclique"),
            "search produced a non-maximal coclique"
        );
        let p = external_profile(self.g, &set);
        assert_eq!(p.total(), n - set.len());
        assert_eq!(p.count(0), 0);
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner))
    }

    #[test]
    fn petersen_sizes() {
        // Maximal cocliques of the Petersen graph have sizes 3 and 4.
        let config = SearchConfig {
            sizes: 1..=6,
            budget: 500,
            ..SearchConfig::default()
        };
        let out = search_maximal(&petersen(), &config);
        let sizes: Vec<usize> = out.sets.iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(out.missing(1..=6), vec![1, 2, 5, 6]);
        assert_eq!(out.constructed, 500);
        assert_eq!(out.largest.unwrap().len(), 4);
    }

    #[test]
    fn deterministic_per_seed_and_workers() {
        let g = petersen();
        let config = SearchConfig {
            sizes: 3..=4,
            budget: 100,
            workers: 3,
            ..SearchConfig::default()
        };
        assert_eq!(search_maximal(&g, &config), search_maximal(&g, &config));
    }

    #[test]
    fn orbit_phase_with_rotation() {
        // Rotating both pentagons is an automorphism; the orbits are the
        // outer and inner cycles, neither a coclique, so the phase can only
        // fall back to plain extension and must still emit maximal sets.
        let rotate: Vec<usize> = (0..10).map(|v| v / 5 * 5 + (v % 5 + 1) % 5).collect();
        let config = SearchConfig {
            sizes: 3..=4,
            budget: 0,
            fixed_size_moves: 0,
            symmetries: vec![rotate],
            orbit_restarts: 50,
            ..SearchConfig::default()
        };
        let out = search_maximal(&petersen(), &config);
        let sizes: Vec<usize> = out.sets.iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert!(out.constructed <= 50);
    }

    #[test]
    fn zero_budget_finds_nothing() {
        let config = SearchConfig {
            budget: 0,
            ..SearchConfig::default()
        };
        let out = search_maximal(&petersen(), &config);
        assert!(out.sets.is_empty());
        assert_eq!(out.constructed, 0);
    }
}
