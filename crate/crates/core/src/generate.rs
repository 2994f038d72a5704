//! Graph families, seeded random graphs, and exhaustive enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by the exhaustive enumerators.
pub const MAX_ENUMERATE_N: usize = 7;

/// Default rejection-sampling cap for [`gapfree_random`].
pub const DEFAULT_RETRY_CAP: u32 = 10_000;

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// Parts `{0..a}` and `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

fn sample_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::edgeless(n).expect("n checked by caller");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Erdős–Rényi `G(n, p)`; pairs are drawn in lexicographic order from a
/// ChaCha8 stream seeded with `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    Graph::edgeless(n)?;
    Ok(sample_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

#[derive(Clone, Debug)]
pub struct GapFreeSample {
    pub graph: Graph,
    /// Number of `G(n, p)` draws, including the accepted one.
    pub attempts: u32,
}

impl GapFreeSample {
    pub fn rejection_rate(&self) -> f64 {
        f64::from(self.attempts - 1) / f64::from(self.attempts)
    }
}

/// Gap-free graph by rejection sampling on `G(n, p)`.
pub fn gapfree_random(n: usize, p: f64, seed: u64, retry_cap: u32) -> Result<GapFreeSample> {
    check_probability(p)?;
    Graph::edgeless(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempts in 1..=retry_cap {
        let graph = sample_gnp(n, p, &mut rng);
        if graph.is_gap_free() {
            return Ok(GapFreeSample { graph, attempts });
        }
    }
    Err(Error::Limit(format!(
        "no gap-free G({n}, {p}) sample within {retry_cap} attempts"
    )))
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::domain(format!(
            "exhaustive enumeration supports n <= {MAX_ENUMERATE_N}, got {n}"
        )));
    }
    Ok(())
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, by adjacency code.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumerable(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |code| Graph::from_code(n, code)))
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical code. Classes on `n` vertices are grown from those on
/// `n - 1` by attaching a new vertex to every neighbour subset.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    check_enumerable(n)?;
    let mut classes = vec![Graph::edgeless(n.min(1))?];
    for m in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for base in &classes {
            let base_edges = base.edges();
            for nbrs in 0..1u64 << (m - 1) {
                let mut edges = base_edges.clone();
                edges.extend(crate::bits::iter(nbrs).map(|u| (u, m - 1)));
                let g = Graph::from_edges(m, &edges)?;
                let (code, canon) = g.canonical_form()?;
                next.entry(code).or_insert(canon);
            }
        }
        classes = next.into_values().collect();
    }
    Ok(classes)
}

/// A named graph or family, parsed from `name:args` text such as `cycle:5`,
/// `kbip:2,3`, `gnp:7,0.5,42`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Gnp { n: usize, p: f64, seed: u64 },
    GapFreeRandom { n: usize, p: f64, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Path(n) => path(n),
            GraphSpec::Cycle(n) => cycle(n),
            GraphSpec::Complete(n) => complete(n),
            GraphSpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
            GraphSpec::Gnp { n, p, seed } => gnp(n, p, seed),
            GraphSpec::GapFreeRandom { n, p, seed } => {
                gapfree_random(n, p, seed, DEFAULT_RETRY_CAP).map(|s| s.graph)
            }
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            GraphSpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
            GraphSpec::GapFreeRandom { n, p, seed } => write!(f, "gapfree:{n},{p},{seed}"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("malformed graph spec {s:?}"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |k: usize| -> Result<usize> { args.get(k).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let float = |k: usize| -> Result<f64> { args.get(k).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let seed = |k: usize| -> Result<u64> { args.get(k).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        match name {
            "path" => arity(1).and(Ok(GraphSpec::Path(int(0)?))),
            "cycle" => arity(1).and(Ok(GraphSpec::Cycle(int(0)?))),
            "complete" => arity(1).and(Ok(GraphSpec::Complete(int(0)?))),
            "kbip" => arity(2).and(Ok(GraphSpec::CompleteBipartite(int(0)?, int(1)?))),
            "gnp" => arity(3).and(Ok(GraphSpec::Gnp {
                n: int(0)?,
                p: float(1)?,
                seed: seed(2)?,
            })),
            "gapfree" => arity(3).and(Ok(GraphSpec::GapFreeRandom {
                n: int(0)?,
                p: float(1)?,
                seed: seed(2)?,
            })),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(cycle(4).unwrap().edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_all(3).unwrap().count(), 8);
        assert_eq!(enumerate_all(5).unwrap().count(), 1024);
        assert!(enumerate_all(8).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        // Known counts of unlabeled graphs: 1, 2, 4, 11, 34, 156.
        let counts: Vec<usize> = (1..=6).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(6, 0.5, 7).unwrap(), gnp(6, 0.5, 7).unwrap());
        assert!(gnp(4, 1.5, 0).is_err());
        assert_eq!(gnp(5, 1.0, 3).unwrap(), complete(5).unwrap());
    }

    #[test]
    fn gapfree_sampler() {
        let s = gapfree_random(7, 0.5, 11, DEFAULT_RETRY_CAP).unwrap();
        assert!(s.graph.is_gap_free());
        assert!(s.attempts >= 1);
        // An empty edge probability never produces a gap, so the first draw wins.
        assert_eq!(gapfree_random(5, 0.0, 1, 1).unwrap().attempts, 1);
    }

    #[test]
    fn spec_parsing() {
        for text in ["path:4", "cycle:5", "complete:3", "kbip:2,3", "gnp:6,0.5,42", "gapfree:6,0.7,1"] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert!("cycle".parse::<GraphSpec>().is_err());
        assert!("cycle:5,6".parse::<GraphSpec>().is_err());
    }
}
