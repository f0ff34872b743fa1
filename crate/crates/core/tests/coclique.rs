mod common;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srg2048::coclique::{
    check_set, external_profile, is_coclique, is_maximal, pair_invariant, search_maximal,
    CocliqueError, SearchConfig, SearchOutcome, KNOWN_PAIR_INVARIANTS_72, KNOWN_PROFILE_72,
};
use srg2048::{CosetGraph, Vec24, VertexSet};

fn cg() -> &'static CosetGraph {
    static G: OnceLock<CosetGraph> = OnceLock::new();
    G.get_or_init(CosetGraph::standard)
}

fn default_search() -> &'static SearchOutcome {
    static S: OnceLock<SearchOutcome> = OnceLock::new();
    S.get_or_init(|| {
        let config = SearchConfig {
            symmetries: cg().residue_symmetries(),
            ..SearchConfig::default()
        };
        search_maximal(&cg().graph, &config)
    })
}

fn image(s: &VertexSet, f: impl Fn(usize) -> usize) -> VertexSet {
    VertexSet::new(s.members().iter().map(|&v| f(v)), 2048).unwrap()
}

#[test]
fn default_search_covers_twenty_to_forty() {
    let out = default_search();
    assert!(
        out.missing(20..=40).is_empty(),
        "missing {:?}",
        out.missing(20..=40)
    );
    for s in &out.sets {
        assert!(common::is_maximal_coclique(&cg().graph, s));
        let p = external_profile(&cg().graph, s);
        assert_eq!(p.total(), 2048 - s.len());
        assert_eq!(p.weighted_sum(), 276 * s.len());
        assert!(s.len() <= 85);
    }
}

#[test]
fn profiles_and_pair_invariants_match_oracles() {
    let g = &cg().graph;
    for s in default_search().sets.iter().step_by(5) {
        let p = external_profile(g, s);
        assert_eq!(
            p.entries().collect::<Vec<_>>(),
            common::profile(g, s).into_iter().collect::<Vec<_>>()
        );
        assert_eq!(pair_invariant(g, s), common::pair_invariant(g, s));
    }
}

#[test]
fn largest_find_is_a_known_size_72_set() {
    let l = default_search().largest.as_ref().unwrap();
    assert_eq!(l.len(), 72);
    let r = check_set(&cg().graph, l, 72);
    assert!(r.profile.matches(&KNOWN_PROFILE_72));
    assert!(KNOWN_PAIR_INVARIANTS_72.contains(&r.pair_invariant.unwrap()));
    assert_eq!(
        r.pair_invariant,
        Some(common::pair_invariant(&cg().graph, l))
    );
}

#[test]
fn invariants_survive_automorphisms() {
    let g = &cg().graph;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let syms = cg().residue_symmetries();
    for s in default_search().sets.iter().step_by(4) {
        let before = (external_profile(g, s), pair_invariant(g, s));
        let t = Vec24::new(rng.random_range(0..1u32 << 23) << 1).unwrap();
        let t = if t.weight() % 2 == 1 {
            t + Vec24::new(1).unwrap()
        } else {
            t
        };
        let moved = image(s, |v| cg().translate(v, t).unwrap());
        assert!(is_maximal(g, &moved).unwrap());
        assert_eq!(
            (external_profile(g, &moved), pair_invariant(g, &moved)),
            before
        );
        let p = &syms[rng.random_range(0..syms.len())];
        let moved = image(s, |v| p[v]);
        assert_eq!(
            (external_profile(g, &moved), pair_invariant(g, &moved)),
            before
        );
    }
}

#[test]
fn two_element_pair_invariant() {
    // No outside vertex has 8 neighbors in a 2-set, so the pair never has
    // a common neighbor there and the invariant is always 1.
    let g = &cg().graph;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    while checked < 50 {
        let (u, v) = (rng.random_range(0..2048), rng.random_range(0..2048));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let s = VertexSet::new([u, v], 2048).unwrap();
        assert_eq!(pair_invariant(g, &s), 1);
        assert_eq!(common::pair_invariant(g, &s), 1);
        checked += 1;
    }
}

#[test]
fn non_cocliques_are_rejected() {
    let g = &cg().graph;
    let a = g.neighbors(5)[0] as usize;
    let s = VertexSet::new([5, a], 2048).unwrap();
    assert!(!is_coclique(g, &s));
    assert!(matches!(
        is_maximal(g, &s),
        Err(CocliqueError::NotCoclique(..))
    ));
    let r = check_set(g, &s, 72);
    assert!(!r.is_maximal_coclique());
    assert_eq!(r.pair_invariant, None);
}

#[test]
fn search_is_deterministic_and_verified() {
    let config = SearchConfig {
        sizes: 24..=30,
        budget: 1_500,
        workers: 3,
        ..SearchConfig::default()
    };
    let a = search_maximal(&cg().graph, &config);
    assert_eq!(a, search_maximal(&cg().graph, &config));
    for s in &a.sets {
        assert!(common::is_maximal_coclique(&cg().graph, s));
    }
}
