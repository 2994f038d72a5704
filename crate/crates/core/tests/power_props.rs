mod common;

use common::{exponent, graph, squarefree_ideal};
use proptest::prelude::*;
use regpow_core::bits;
use regpow_core::monomial::monomials_up_to_degree;
use regpow_core::power::{
    criterion_in_power, differential_membership, minimal_primes, ord, power_membership, PowerPair,
};
use regpow_core::{generate, symbolic_power, symbolic_power_of_graph, ExponentVector, Graph, MonomialIdeal, Selector};

/// Minimal vertex covers by exhaustive search over all vertex subsets.
fn covers_by_search(g: &Graph) -> Vec<u64> {
    let covers: Vec<u64> = (0..1u64 << g.n())
        .filter(|&c| g.edges().iter().all(|&(u, v)| bits::contains(c, u) || bits::contains(c, v)))
        .collect();
    let mut minimal: Vec<u64> = covers
        .iter()
        .copied()
        .filter(|&c| !covers.iter().any(|&d| d != c && bits::is_subset(d, c)))
        .collect();
    minimal.sort_unstable();
    minimal
}

/// `x^f ∈ I(G)^(s)` iff every minimal cover meets `f` with weight at least `s`.
fn in_symbolic_by_covers(g: &Graph, f: &ExponentVector, s: u32) -> bool {
    covers_by_search(g)
        .iter()
        .all(|&c| bits::iter(c).map(|j| f.deg(j)).sum::<u32>() >= s)
}

/// Largest `t` with `x^f ∈ I^t`, by expanding powers.
fn order_by_powers(i: &MonomialIdeal, f: &ExponentVector) -> u32 {
    let mut t = 0;
    while i.power(t + 1).contains(f).unwrap() {
        t += 1;
    }
    t
}

fn is_bipartite(g: &Graph) -> bool {
    (0..1u64 << g.n()).any(|side| g.edges().iter().all(|&(u, v)| bits::contains(side, u) != bits::contains(side, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_membership_three_ways(g in graph(5), f in exponent(5, 3), s in 1u32..=3) {
        prop_assume!(g.edge_count() > 0);
        let sym = symbolic_power_of_graph(&g, s).unwrap();
        let expected = in_symbolic_by_covers(&g, &f, s);
        prop_assert_eq!(sym.contains(&f).unwrap(), expected);
        prop_assert_eq!(differential_membership(&f, &g.edge_ideal(), s).unwrap(), expected);
    }

    #[test]
    fn minimal_primes_are_minimal_covers(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let mut primes = minimal_primes(&g.edge_ideal()).unwrap();
        primes.sort_unstable();
        let mut covers = g.minimal_vertex_covers();
        covers.sort_unstable();
        prop_assert_eq!(&primes, &covers);
        prop_assert_eq!(covers, covers_by_search(&g));
    }

    #[test]
    fn ordinary_inside_symbolic(g in graph(6), s in 1u32..=3) {
        prop_assume!(g.edge_count() > 0);
        let pair = PowerPair::new(&g.edge_ideal(), s).unwrap();
        for gen in pair.ordinary.gens() {
            prop_assert!(pair.symbolic.contains(gen).unwrap());
        }
        for gen in &pair.extra {
            prop_assert!(!pair.ordinary.contains(gen).unwrap());
        }
    }

    #[test]
    fn symbolic_power_of_squarefree_ideal(i in squarefree_ideal(4, 4), f in exponent(4, 3), s in 1u32..=3) {
        prop_assume!(!i.is_unit());
        let sym = symbolic_power(&i, s).unwrap();
        prop_assert_eq!(sym.contains(&f).unwrap(), differential_membership(&f, &i, s).unwrap());
    }

    #[test]
    fn intermediate_ideals_sit_between(g in graph(6), s in 2u32..=3, seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let pair = PowerPair::new(&g.edge_ideal(), s).unwrap();
        let j = pair.intermediate(&Selector::RandomMask { seed }).unwrap();
        prop_assert!(pair.ordinary.is_subset_of(&j).unwrap());
        prop_assert!(j.is_subset_of(&pair.symbolic).unwrap());
        // Low-degree colons all recover I(G).
        for a in monomials_up_to_degree(g.n(), s - 1) {
            prop_assert_eq!(j.radical_colon(&a).unwrap(), g.edge_ideal());
        }
    }

    #[test]
    fn order_matches_power_membership(g in graph(5), f in exponent(5, 3)) {
        prop_assume!(g.edge_count() > 0);
        let i = g.edge_ideal();
        let t = ord(&g, &f).unwrap();
        prop_assert_eq!(t, order_by_powers(&i, &f));
        prop_assert!(power_membership(&f, &i, t).unwrap());
        prop_assert!(!power_membership(&f, &i, t + 1).unwrap());
    }

    #[test]
    fn membership_criterion_for_radical_colons(g in graph(5), a in exponent(5, 2), s in 1u32..=3) {
        prop_assume!(g.edge_count() > 0);
        let target = g.edge_ideal().power(s).radical_colon(&a).unwrap();
        for face in (0..1u64 << g.n()).filter(|&f| g.is_independent(f)) {
            let holds = criterion_in_power(&g, face, &a, s).unwrap();
            let x_f = ExponentVector::from_set(g.n(), face);
            if holds {
                prop_assert!(target.contains(&x_f).unwrap());
            }
            if target.gens().contains(&x_f) {
                prop_assert!(holds);
            }
        }
    }
}

#[test]
fn bipartite_symbolic_powers_are_ordinary() {
    let mut checked = 0;
    for n in 2..=6 {
        for g in generate::isomorphism_classes(n).unwrap() {
            if g.edge_count() == 0 || !is_bipartite(&g) {
                continue;
            }
            for s in 1..=3 {
                assert_eq!(symbolic_power_of_graph(&g, s).unwrap(), g.edge_ideal().power(s), "{g:?}, s = {s}");
            }
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn triangle_symbolic_square_has_extra_generator() {
    let k3 = generate::complete(3).unwrap();
    let pair = PowerPair::new(&k3.edge_ideal(), 2).unwrap();
    assert_eq!(pair.extra, vec![ExponentVector::new(vec![1, 1, 1])]);
    assert!(!is_bipartite(&k3));
}
