//! Simple graphs on `{0, .., n-1}` stored as adjacency bitmasks.

use std::fmt;

use crate::bits::{self, VarSet, MAX_VARS};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VarSet>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Limit(format!("{n} vertices exceeds {MAX_VARS}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds from 0-based edges; loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge {{{}, {}}} outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {}", u + 1)));
            }
            if g.has_edge(u, v) {
                return Err(Error::domain(format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from an upper-triangle bit code (see [`Graph::code`]).
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Graph { n, adj: vec![0; n] };
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if code >> bit & 1 == 1 {
                    g.insert_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.adj[u], v)
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits::iter(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Upper-triangle adjacency bits in `(0,1), (0,2), .., (n-2,n-1)` order.
    pub fn code(&self) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// `N(x)`.
    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v]
    }

    /// `N(U) = ∪ N(u)`.
    pub fn open_neighborhood(&self, set: VarSet) -> VarSet {
        bits::iter(set).fold(0, |acc, u| acc | self.adj[u])
    }

    /// `N[U] = ∪ N[u]`.
    pub fn closed_neighborhood(&self, set: VarSet) -> VarSet {
        self.open_neighborhood(set) | set
    }

    pub fn is_independent(&self, set: VarSet) -> bool {
        bits::iter(set).all(|u| self.adj[u] & set == 0)
    }

    /// Whether the induced subgraph on `set` has an edge.
    pub fn has_edge_within(&self, set: VarSet) -> bool {
        !self.is_independent(set)
    }

    pub fn complement(&self) -> Graph {
        let full = bits::full(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| full & !self.adj[v] & !bits::bit(v))
                .collect(),
        }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn induced(&self, set: VarSet) -> Graph {
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| if bits::contains(set, v) { self.adj[v] & set } else { 0 })
                .collect(),
        }
    }

    /// `I(G) = (x_i x_j : ij ∈ E(G))`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let sets: Vec<VarSet> = self
            .edges()
            .into_iter()
            .map(|(u, v)| bits::bit(u) | bits::bit(v))
            .collect();
        MonomialIdeal::from_sets(self.n, &sets)
    }

    /// `x_u x_v` as an exponent vector.
    pub fn edge_monomial(&self, u: usize, v: usize) -> ExponentVector {
        ExponentVector::from_set(self.n, bits::bit(u) | bits::bit(v))
    }

    /// No two disjoint edges induce a 2K2.
    pub fn is_gap_free(&self) -> bool {
        self.find_gap().is_none()
    }

    /// A pair of disjoint edges with no edge between them, if any.
    pub fn find_gap(&self) -> Option<((usize, usize), (usize, usize))> {
        let edges = self.edges();
        for (k, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[k + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let joined = self.has_edge(a, c)
                    || self.has_edge(a, d)
                    || self.has_edge(b, c)
                    || self.has_edge(b, d);
                if !joined {
                    return Some(((a, b), (c, d)));
                }
            }
        }
        None
    }

    /// The induced subgraph on `[n] \ N[{j, k}]` is edgeless.
    pub fn covering_edge_property(&self, j: usize, k: usize) -> Result<bool> {
        if j >= self.n || k >= self.n || !self.has_edge(j, k) {
            return Err(Error::domain(format!("{{{}, {}}} is not an edge", j + 1, k + 1)));
        }
        let rest = bits::full(self.n) & !self.closed_neighborhood(bits::bit(j) | bits::bit(k));
        Ok(self.is_independent(rest))
    }

    /// Perfect elimination ordering by repeated removal of simplicial vertices.
    pub fn is_chordal(&self) -> bool {
        let mut alive = bits::full(self.n);
        while alive != 0 {
            let simplicial = bits::iter(alive).find(|&v| {
                let nb = self.adj[v] & alive;
                bits::iter(nb).all(|u| bits::is_subset(nb & !bits::bit(u), self.adj[u]))
            });
            match simplicial {
                Some(v) => alive &= !bits::bit(v),
                None => return false,
            }
        }
        true
    }

    /// Maximal independent sets (Bron-Kerbosch with pivoting on the complement).
    pub fn maximal_independent_sets(&self) -> Vec<VarSet> {
        let co = self.complement();
        let mut out = Vec::new();
        co.bron_kerbosch(0, bits::full(self.n), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: VarSet, mut p: VarSet, mut x: VarSet, out: &mut Vec<VarSet>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits::iter(p | x)
            .max_by_key(|&u| (self.adj[u] & p).count_ones())
            .expect("p is nonempty");
        for v in bits::iter(p & !self.adj[pivot]) {
            self.bron_kerbosch(r | bits::bit(v), p & self.adj[v], x & self.adj[v], out);
            p &= !bits::bit(v);
            x |= bits::bit(v);
        }
    }

    /// Minimal vertex covers: complements of maximal independent sets.
    pub fn minimal_vertex_covers(&self) -> Vec<VarSet> {
        let full = bits::full(self.n);
        let mut covers: Vec<VarSet> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| full & !s)
            .collect();
        covers.sort_unstable();
        covers
    }

    /// Lexicographically smallest adjacency code over all relabelings, with the
    /// relabeled graph. Brute force over `n!` permutations.
    pub fn canonical_form(&self) -> Result<(u64, Graph)> {
        if self.n > 8 {
            return Err(Error::Limit(format!(
                "brute-force canonical form supports n <= 8, got {}",
                self.n
            )));
        }
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = (self.code(), perm.clone());
        let edges = self.edges();
        let mut pair_bit = vec![vec![0u32; n]; n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                pair_bit[u][v] = bit;
                pair_bit[v][u] = bit;
                bit += 1;
            }
        }
        let mut visit = |p: &[usize]| {
            let code = edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit[p[u]][p[v]]);
            if code < best.0 {
                best = (code, p.to_vec());
            }
        };
        heap_permutations(&mut perm, &mut visit);
        let (code, p) = best;
        Ok((code, self.relabel(&p)))
    }
}

/// Calls `visit` on every permutation of `items` (Heap's algorithm).
fn heap_permutations(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}
