mod common;

use common::graph;
use proptest::prelude::*;
use regpow_core::bits;
use regpow_core::generate;
use regpow_core::io::{parse_graph_text, write_graph_text};
use regpow_core::Graph;

/// Induced 2K2 by brute force over vertex quadruples.
fn has_induced_two_k2(g: &Graph) -> bool {
    let edges = g.edges();
    edges.iter().any(|&(a, b)| {
        edges.iter().any(|&(c, d)| {
            let four = [a, b, c, d];
            let distinct = bits::from_indices(four).count_ones() == 4;
            let induced = [(a, c), (a, d), (b, c), (b, d)].iter().filter(|&&(x, y)| g.has_edge(x, y)).count();
            distinct && induced == 0
        })
    })
}

/// Chordal iff no induced cycle of length at least 4.
fn has_long_induced_cycle(g: &Graph) -> bool {
    (0..1u64 << g.n()).filter(|s| s.count_ones() >= 4).any(|s| {
        let h = g.induced(s);
        let two_regular = bits::iter(s).all(|v| (h.neighbors(v) & s).count_ones() == 2);
        two_regular && connected(&h, s)
    })
}

fn connected(g: &Graph, set: u64) -> bool {
    let start = set.trailing_zeros() as usize;
    let mut seen = bits::bit(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in bits::iter(g.neighbors(v) & set & !seen) {
            seen |= bits::bit(w);
            stack.push(w);
        }
    }
    seen == set
}

#[test]
fn gap_free_iff_every_edge_covers() {
    for n in 0..=6 {
        for g in generate::enumerate_all(n).unwrap() {
            let covering = g.edges().iter().all(|&(j, k)| g.covering_edge_property(j, k).unwrap());
            assert_eq!(g.is_gap_free(), covering, "{g:?}");
            assert_eq!(g.is_gap_free(), !has_induced_two_k2(&g), "{g:?}");
        }
    }
}

#[test]
fn chordality_matches_induced_cycles() {
    for n in 0..=6 {
        for g in generate::isomorphism_classes(n).unwrap() {
            assert_eq!(g.is_chordal(), !has_long_induced_cycle(&g), "{g:?}");
        }
    }
    for n in 0..=8 {
        assert!(generate::complete(n).unwrap().is_chordal());
    }
}

#[test]
fn golden_random_graph() {
    let golden = include_str!("golden/gnp_5_0.5_42.txt");
    let g = generate::gnp(5, 0.5, 42).unwrap();
    assert_eq!(write_graph_text(&g), golden);
    assert_eq!(parse_graph_text(golden).unwrap(), g);
}

#[test]
fn neighborhood_examples() {
    let p3 = generate::path(3).unwrap();
    assert_eq!(p3.closed_neighborhood(0b010), 0b111);
    assert_eq!(p3.closed_neighborhood(0), 0);
    let c4 = generate::cycle(4).unwrap();
    assert_eq!(c4.closed_neighborhood(0b0001), 0b1011);
    assert_eq!(c4.open_neighborhood(0b0001), 0b1010);
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(7)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), 21);
    }

    #[test]
    fn canonical_form_is_label_invariant(g in graph(6), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        prop_assert_eq!(g.is_gap_free(), h.is_gap_free());
        prop_assert_eq!(g.is_chordal(), h.is_chordal());
    }

    #[test]
    fn text_format_round_trips(g in graph(7)) {
        let text = write_graph_text(&g);
        prop_assert_eq!(parse_graph_text(&text).unwrap(), g);
    }

    #[test]
    fn independent_sets_complement_covers(g in graph(6)) {
        let full = bits::full(g.n());
        let mut from_sets: Vec<u64> = g.maximal_independent_sets().iter().map(|s| full & !s).collect();
        from_sets.sort_unstable();
        let mut covers = g.minimal_vertex_covers();
        covers.sort_unstable();
        prop_assert_eq!(from_sets, covers);
    }
}
