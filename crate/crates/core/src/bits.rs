//! Vertex and variable sets packed into a `u64`; bit `j` is vertex `j` (0-based).

/// A subset of `{0, .., 63}`.
pub type VarSet = u64;

/// Largest variable or vertex count representable by a [`VarSet`].
pub const MAX_VARS: usize = 64;

#[inline]
pub fn full(n: usize) -> VarSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(j: usize) -> VarSet {
    1u64 << j
}

#[inline]
pub fn contains(set: VarSet, j: usize) -> bool {
    set >> j & 1 == 1
}

#[inline]
pub fn is_subset(a: VarSet, b: VarSet) -> bool {
    a & !b == 0
}

/// Iterates the members of `set` in increasing order.
pub fn iter(set: VarSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(j)
        }
    })
}

/// Iterates all subsets of `set`, including the empty set and `set` itself.
pub fn subsets(set: VarSet) -> impl Iterator<Item = VarSet> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set {
            None
        } else {
            Some((cur.wrapping_sub(set)) & set)
        };
        Some(cur)
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> VarSet {
    items.into_iter().fold(0, |acc, j| acc | bit(j))
}

pub fn to_vec(set: VarSet) -> Vec<usize> {
    iter(set).collect()
}

/// Keeps the inclusion-maximal sets, sorted ascending.
pub fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| is_subset(s, k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-minimal sets, sorted ascending.
pub fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| is_subset(k, s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// All inclusion-minimal transversals of the hypergraph `edges` within `[0, n)`.
///
/// A transversal meets every edge. An empty edge admits no transversal, so the
/// result is empty; an edgeless hypergraph has the single transversal `{}`.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let edges = minimal_sets(edges.to_vec());
    let mut out = Vec::new();
    transversal_search(&edges, 0, 0, &mut out);
    minimal_sets(out)
}

fn transversal_search(edges: &[VarSet], chosen: VarSet, forbidden: VarSet, out: &mut Vec<VarSet>) {
    let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
        out.push(chosen);
        return;
    };
    // Branch on each admissible vertex of the first uncovered edge; vertices
    // tried earlier are forbidden in later branches so no cover repeats.
    let mut forbid = forbidden;
    for v in iter(open & !forbidden) {
        let next = chosen | bit(v);
        // Prune when some uncovered edge has only forbidden vertices left.
        let dead = edges.iter().any(|&e| e & next == 0 && e & !forbid == 0);
        if !dead {
            transversal_search(edges, next, forbid, out);
        }
        forbid |= bit(v);
    }
}
