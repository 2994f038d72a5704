#![allow(dead_code)]

use proptest::prelude::*;
use regpow_core::bits::VarSet;
use regpow_core::{ExponentVector, Graph, MonomialIdeal, SimplicialComplex};

pub fn exponent(n: usize, max: u32) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max, n).prop_map(ExponentVector::new)
}

/// Nonzero monomial ideal with up to `k` generators of small degree.
pub fn monomial_ideal(n: usize, k: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(exponent(n, max), 1..=k)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

pub fn squarefree_ideal(n: usize, k: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1..(1u64 << n), 1..=k).prop_map(move |sets| MonomialIdeal::from_sets(n, &sets))
}

/// Squarefree, nonzero, proper.
pub fn proper_squarefree_ideal(n: usize, k: usize) -> impl Strategy<Value = MonomialIdeal> {
    squarefree_ideal(n, k).prop_filter("unit ideal", |i| !i.is_unit())
}

pub fn graph(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * (n - 1) / 2;
    (0..(1u64 << pairs)).prop_map(move |code| Graph::from_code(n, code))
}

/// Nonvoid complex on `n` vertices.
pub fn complex(n: usize, k: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(0..(1u64 << n), 1..=k)
        .prop_map(move |facets: Vec<VarSet>| SimplicialComplex::from_facets(n, facets).unwrap())
}
