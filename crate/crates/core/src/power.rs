//! Ordinary and symbolic powers, intermediate ideals, `ord_I`, and the colon
//! identities for symbolic powers of edge ideals.
//!
//! Symbolic powers of a squarefree ideal are built as `⋂_P P^s` over its
//! minimal primes. The coefficient-free differential criterion is provided
//! separately as a membership test and is used only for verification.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, VarSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{bounded_subvectors, ExponentVector, MonomialIdeal};

fn require_squarefree(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_squarefree() {
        return Err(Error::domain("expected a squarefree monomial ideal"));
    }
    Ok(())
}

fn require_positive(s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    Ok(())
}

/// Minimal primes of a squarefree ideal, as variable sets: the minimal
/// transversals of the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    require_squarefree(ideal)?;
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no minimal primes"));
    }
    Ok(bits::minimal_transversals(&ideal.supports()))
}

/// `(x_j : j ∈ C)^s`: every monomial of degree `s` supported on `C`.
pub fn prime_power(n: usize, prime: VarSet, s: u32) -> MonomialIdeal {
    let bound = ExponentVector::new(
        (0..n)
            .map(|j| if bits::contains(prime, j) { s } else { 0 })
            .collect(),
    );
    let gens = bounded_subvectors(&bound, s)
        .into_iter()
        .filter(|a| a.degree() == s)
        .collect();
    MonomialIdeal::new(n, gens).expect("lengths agree")
}

/// `I^(s) = ⋂_P P^s` for a squarefree ideal `I`.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    require_positive(s)?;
    let mut primes = minimal_primes(ideal)?;
    primes.sort_by_key(|p| p.count_ones());
    intersect_prime_powers(ideal.n(), &primes, s)
}

fn intersect_prime_powers(n: usize, primes: &[VarSet], s: u32) -> Result<MonomialIdeal> {
    let mut acc: Option<MonomialIdeal> = None;
    for &p in primes {
        let pp = prime_power(n, p, s);
        acc = Some(match acc {
            None => pp,
            Some(a) => a.intersect(&pp)?,
        });
    }
    Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(n)))
}

/// `I(G)^(s)` from the minimal vertex covers of `G`. An edgeless graph yields
/// the zero ideal.
pub fn symbolic_power_of_graph(graph: &Graph, s: u32) -> Result<MonomialIdeal> {
    require_positive(s)?;
    if graph.edge_count() == 0 {
        return Ok(MonomialIdeal::zero(graph.n()));
    }
    let mut covers = graph.minimal_vertex_covers();
    covers.sort_by_key(|c| c.count_ones());
    intersect_prime_powers(graph.n(), &covers, s)
}

/// Whether every `∂*f/∂*x^a` with `|a| <= s - 1` lies in `I`. Derivatives with
/// `x^a ∤ f` are zero and impose no condition.
pub fn differential_membership(f: &ExponentVector, ideal: &MonomialIdeal, s: u32) -> Result<bool> {
    require_squarefree(ideal)?;
    require_positive(s)?;
    ideal.contains(f)?;
    Ok(bounded_subvectors(f, s - 1)
        .iter()
        .all(|a| ideal.contains_unchecked(&f.quotient(a))))
}

/// Minimal generators of `I^(s)` that are not in `I^s`.
pub fn extra_generators(symbolic: &MonomialIdeal, ordinary: &MonomialIdeal) -> Vec<ExponentVector> {
    symbolic
        .gens()
        .iter()
        .filter(|g| !ordinary.contains_unchecked(g))
        .cloned()
        .collect()
}

/// Which extra generators of `I^(s)` an intermediate ideal adds to `I^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    None,
    All,
    Explicit(Vec<ExponentVector>),
    /// Each extra generator independently with probability 1/2.
    RandomMask { seed: u64 },
}

/// An element of `Inter(I^s, I^(s))`.
#[derive(Clone, Debug)]
pub struct IntermediateSpec {
    pub base: MonomialIdeal,
    pub s: u32,
    pub selector: Selector,
}

impl IntermediateSpec {
    pub fn for_graph(graph: &Graph, s: u32, selector: Selector) -> Self {
        IntermediateSpec {
            base: graph.edge_ideal(),
            s,
            selector,
        }
    }
}

/// Precomputed `I^s` and `I^(s)` for building many intermediates.
#[derive(Clone, Debug)]
pub struct PowerPair {
    pub ordinary: MonomialIdeal,
    pub symbolic: MonomialIdeal,
    pub extra: Vec<ExponentVector>,
}

impl PowerPair {
    pub fn new(base: &MonomialIdeal, s: u32) -> Result<Self> {
        require_positive(s)?;
        let ordinary = base.power(s);
        let symbolic = symbolic_power(base, s)?;
        let extra = extra_generators(&symbolic, &ordinary);
        Ok(PowerPair {
            ordinary,
            symbolic,
            extra,
        })
    }

    /// `I^s + (selected)`.
    pub fn intermediate(&self, selector: &Selector) -> Result<MonomialIdeal> {
        let chosen: Vec<ExponentVector> = match selector {
            Selector::None => Vec::new(),
            Selector::All => self.extra.clone(),
            Selector::Explicit(list) => {
                if let Some(bad) = list.iter().find(|f| !self.extra.contains(f)) {
                    return Err(Error::domain(format!(
                        "{bad} is not a minimal generator of the symbolic power outside the ordinary power"
                    )));
                }
                list.clone()
            }
            Selector::RandomMask { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                self.extra.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
            }
        };
        let mut gens = self.ordinary.gens().to_vec();
        gens.extend(chosen);
        MonomialIdeal::new(self.ordinary.n(), gens)
    }
}

pub fn intermediate_ideal(spec: &IntermediateSpec) -> Result<MonomialIdeal> {
    PowerPair::new(&spec.base, spec.s)?.intermediate(&spec.selector)
}

/// `ord_I(x^f)` for `I = I(G)`: the largest number of edges, with
/// multiplicity, whose product divides `x^f`.
pub fn ord(graph: &Graph, f: &ExponentVector) -> Result<u32> {
    if f.len() != graph.n() {
        return Err(Error::Dimension {
            expected: graph.n(),
            found: f.len(),
        });
    }
    let mut memo = HashMap::new();
    Ok(ord_search(graph, &mut f.entries().to_vec(), &mut memo))
}

fn ord_search(graph: &Graph, f: &mut Vec<u32>, memo: &mut HashMap<Vec<u32>, u32>) -> u32 {
    let live: VarSet = f
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (j, _)| acc | bits::bit(j));
    // First vertex that still has a usable edge.
    let Some(u) = bits::iter(live).find(|&u| graph.neighbors(u) & live != 0) else {
        return 0;
    };
    if let Some(&hit) = memo.get(f.as_slice()) {
        return hit;
    }
    let key = f.clone();
    // Either u lies on no edge of an optimal packing...
    let saved = f[u];
    f[u] = 0;
    let mut best = ord_search(graph, f, memo);
    f[u] = saved;
    // ...or some edge uv is used.
    for v in bits::iter(graph.neighbors(u) & live) {
        f[u] -= 1;
        f[v] -= 1;
        best = best.max(1 + ord_search(graph, f, memo));
        f[u] += 1;
        f[v] += 1;
    }
    memo.insert(key, best);
    best
}

/// Whether `x^f` is divisible by a product of `s` generators of `I`, i.e.
/// `x^f ∈ I^s`, without expanding `I^s`.
pub fn power_membership(f: &ExponentVector, ideal: &MonomialIdeal, s: u32) -> Result<bool> {
    ideal.contains(f)?;
    let mut failed = HashSet::new();
    Ok(power_search(ideal, f, s, &mut failed))
}

fn power_search(
    ideal: &MonomialIdeal,
    f: &ExponentVector,
    s: u32,
    failed: &mut HashSet<(ExponentVector, u32)>,
) -> bool {
    if s == 0 {
        return true;
    }
    if failed.contains(&(f.clone(), s)) {
        return false;
    }
    let found = ideal
        .gens()
        .iter()
        .filter_map(|g| f.checked_div(g))
        .any(|rest| power_search(ideal, &rest, s - 1, failed));
    if !found {
        failed.insert((f.clone(), s));
    }
    found
}

/// Evaluates `Σ_{j∈N(F)} a_j + ord_I(Π_{u∉N[F]} x_u^{a_u}) >= s` for an
/// independent set `F`.
pub fn criterion_in_power(graph: &Graph, face: VarSet, a: &ExponentVector, s: u32) -> Result<bool> {
    if !bits::is_subset(face, bits::full(graph.n())) || !graph.is_independent(face) {
        return Err(Error::domain("F must be an independent set of G"));
    }
    if a.len() != graph.n() {
        return Err(Error::Dimension {
            expected: graph.n(),
            found: a.len(),
        });
    }
    let open = graph.open_neighborhood(face);
    let closed = open | face;
    let near: u32 = bits::iter(open).map(|j| a.deg(j)).sum();
    let far = a.restrict(bits::full(graph.n()) & !closed);
    Ok(near + ord(graph, &far)? >= s)
}

/// The colon identities expressing `sqrt(I^(s) : x^a)` through colons of `I`
/// itself. Vertices are 0-based and must be distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColonPattern {
    /// `s = 2`, `x^a = x_u x_v`: `(I : x_u) ∩ (I : x_v)`.
    SquarefreePair { u: usize, v: usize },
    /// `s = 3`, `x^a = x_u^2 x_v`: `(I : x_u) ∩ (I : x_v)`.
    SquaredPair { u: usize, v: usize },
    /// `s = 3`, `x^a = x_u^2 x_v x_w`: `(I : x_u) ∩ (I : x_v x_w)`.
    SquaredTriple { u: usize, v: usize, w: usize },
    /// `s = 3`, `x^a = x_1 x_2 x_3 x_4`: `⋂ I : x_e` over non-edges `e` among
    /// the four vertices.
    Quadruple([usize; 4]),
}

/// Pattern families, for enumerating admissible tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColonFamily {
    SquarefreePair,
    SquaredPair,
    SquaredTriple,
    Quadruple,
}

impl ColonFamily {
    pub const ALL: [ColonFamily; 4] = [
        ColonFamily::SquarefreePair,
        ColonFamily::SquaredPair,
        ColonFamily::SquaredTriple,
        ColonFamily::Quadruple,
    ];

    pub fn power(self) -> u32 {
        match self {
            ColonFamily::SquarefreePair => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColonFamily::SquarefreePair => "pair-s2",
            ColonFamily::SquaredPair => "squared-pair-s3",
            ColonFamily::SquaredTriple => "squared-triple-s3",
            ColonFamily::Quadruple => "quadruple-s3",
        }
    }

    /// Every vertex tuple of the right shape on `n` vertices. Roles that the
    /// identity treats symmetrically are enumerated once.
    pub fn tuples(self, n: usize) -> Vec<ColonPattern> {
        let mut out = Vec::new();
        match self {
            ColonFamily::SquarefreePair => {
                for u in 0..n {
                    for v in u + 1..n {
                        out.push(ColonPattern::SquarefreePair { u, v });
                    }
                }
            }
            ColonFamily::SquaredPair => {
                for u in 0..n {
                    for v in (0..n).filter(|&v| v != u) {
                        out.push(ColonPattern::SquaredPair { u, v });
                    }
                }
            }
            ColonFamily::SquaredTriple => {
                for u in 0..n {
                    for v in (0..n).filter(|&v| v != u) {
                        for w in (v + 1..n).filter(|&w| w != u) {
                            out.push(ColonPattern::SquaredTriple { u, v, w });
                        }
                    }
                }
            }
            ColonFamily::Quadruple => {
                for set in 0..1u64 << n {
                    if set.count_ones() == 4 {
                        let v = bits::to_vec(set);
                        out.push(ColonPattern::Quadruple([v[0], v[1], v[2], v[3]]));
                    }
                }
            }
        }
        out
    }
}

impl ColonPattern {
    pub fn family(&self) -> ColonFamily {
        match self {
            ColonPattern::SquarefreePair { .. } => ColonFamily::SquarefreePair,
            ColonPattern::SquaredPair { .. } => ColonFamily::SquaredPair,
            ColonPattern::SquaredTriple { .. } => ColonFamily::SquaredTriple,
            ColonPattern::Quadruple(_) => ColonFamily::Quadruple,
        }
    }

    pub fn power(&self) -> u32 {
        self.family().power()
    }

    fn vertices(&self) -> Vec<usize> {
        match *self {
            ColonPattern::SquarefreePair { u, v } | ColonPattern::SquaredPair { u, v } => vec![u, v],
            ColonPattern::SquaredTriple { u, v, w } => vec![u, v, w],
            ColonPattern::Quadruple(q) => q.to_vec(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= n) {
            return Err(Error::domain(format!("{self:?}: vertex outside 1..={n}")));
        }
        if bits::from_indices(vs.iter().copied()).count_ones() as usize != vs.len() {
            return Err(Error::domain(format!("{self:?}: vertices must be distinct")));
        }
        Ok(())
    }

    /// The exponent `a` of the identity.
    pub fn exponent(&self, n: usize) -> Result<ExponentVector> {
        self.validate(n)?;
        let mut a = vec![0u32; n];
        for v in self.vertices() {
            a[v] = 1;
        }
        match *self {
            ColonPattern::SquaredPair { u, .. } | ColonPattern::SquaredTriple { u, .. } => a[u] = 2,
            _ => {}
        }
        Ok(ExponentVector::new(a))
    }

    /// The right-hand side, computed from colons of `I(G)`.
    pub fn rhs(&self, graph: &Graph) -> Result<MonomialIdeal> {
        self.validate(graph.n())?;
        let n = graph.n();
        let ideal = graph.edge_ideal();
        let colon_by = |set: VarSet| ideal.colon(&ExponentVector::from_set(n, set));
        let b = bits::bit;
        let parts: Vec<MonomialIdeal> = match *self {
            ColonPattern::SquarefreePair { u, v } | ColonPattern::SquaredPair { u, v } => {
                vec![colon_by(b(u))?, colon_by(b(v))?]
            }
            ColonPattern::SquaredTriple { u, v, w } => vec![colon_by(b(u))?, colon_by(b(v) | b(w))?],
            ColonPattern::Quadruple(q) => {
                let mut parts = Vec::new();
                for (i, &x) in q.iter().enumerate() {
                    for &y in &q[i + 1..] {
                        if !graph.has_edge(x, y) {
                            parts.push(colon_by(b(x) | b(y))?);
                        }
                    }
                }
                parts
            }
        };
        parts
            .into_iter()
            .try_fold(MonomialIdeal::unit(n), |acc, p| acc.intersect(&p))
    }
}

/// Both sides of a colon identity.
#[derive(Clone, Debug)]
pub struct ColonCheck {
    pub pattern: ColonPattern,
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
}

impl ColonCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks a colon identity: the left side is `sqrt(I^(s) : x^a)` from the
/// symbolic power, the right side comes from colons of `I(G)`.
pub fn colon_identity(graph: &Graph, s: u32, pattern: ColonPattern) -> Result<ColonCheck> {
    if s != pattern.power() {
        return Err(Error::domain(format!(
            "{pattern:?} is an identity for s = {}, not s = {s}",
            pattern.power()
        )));
    }
    let symbolic = symbolic_power_of_graph(graph, s)?;
    colon_identity_with(graph, &symbolic, pattern)
}

/// [`colon_identity`] with a precomputed `I(G)^(s)` for the pattern's `s`.
pub fn colon_identity_with(graph: &Graph, symbolic: &MonomialIdeal, pattern: ColonPattern) -> Result<ColonCheck> {
    let a = pattern.exponent(graph.n())?;
    Ok(ColonCheck {
        pattern,
        lhs: symbolic.radical_colon(&a)?,
        rhs: pattern.rhs(graph)?,
    })
}
