//! Test corpora: exhaustive small graphs plus seeded random samples.
//!
//! Exhaustive coverage is split by size: every labeled graph for `n <= 5`,
//! one representative per isomorphism class for `n = 6, 7`. Random samples
//! are drawn at `n ∈ {nmax + 1, nmax + 2}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regpow_core::generate::{self, GraphSpec, MAX_ENUMERATE_N};
use regpow_core::{bits, Graph, MonomialIdeal};

use crate::error::{HarnessError, Result};

/// Largest `n` enumerated label by label; above it classes are deduplicated.
pub const MAX_LABELED_N: usize = 5;

/// Edge probabilities cycled through by random samplers.
const GNP_PROBABILITIES: [f64; 1] = [0.5];
const GAPFREE_PROBABILITIES: [f64; 4] = [0.5, 0.6, 0.7, 0.8];

#[derive(Clone, Debug, PartialEq)]
pub enum Subject {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

impl Subject {
    pub fn n(&self) -> usize {
        match self {
            Subject::Graph(g) => g.n(),
            Subject::Ideal(i) => i.n(),
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        match self {
            Subject::Graph(g) => g.edge_ideal(),
            Subject::Ideal(i) => i.clone(),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Subject::Graph(g) => Some(g),
            Subject::Ideal(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusItem {
    pub index: usize,
    /// Reproducible description: `labeled:n:code`, `iso:n:code`, a graph
    /// family spec such as `gapfree:8,0.7,1234`, or `ideal:n:gens`.
    pub descriptor: String,
    pub subject: Subject,
}

/// What the random part of a corpus contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    Gnp,
    GapFree,
    SquarefreeIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusPlan {
    pub nmax: usize,
    pub samples: usize,
    pub seed: u64,
    pub random: RandomKind,
}

/// Exhaustive graphs on `0..=nmax` vertices followed by `samples` random items.
pub fn build(plan: &CorpusPlan) -> Result<Vec<CorpusItem>> {
    if plan.nmax > MAX_ENUMERATE_N {
        return Err(HarnessError::input(format!(
            "exhaustive corpus supports nmax <= {MAX_ENUMERATE_N}, got {}",
            plan.nmax
        )));
    }
    let mut items = Vec::new();
    for n in 0..=plan.nmax {
        if n <= MAX_LABELED_N {
            for g in generate::enumerate_all(n)? {
                let descriptor = format!("labeled:{n}:{}", g.code());
                push(&mut items, descriptor, Subject::Graph(g));
            }
        } else {
            for g in generate::isomorphism_classes(n)? {
                let descriptor = format!("iso:{n}:{}", g.code());
                push(&mut items, descriptor, Subject::Graph(g));
            }
        }
    }
    items.extend(random_items(plan, items.len())?);
    Ok(items)
}

fn push(items: &mut Vec<CorpusItem>, descriptor: String, subject: Subject) {
    items.push(CorpusItem {
        index: items.len(),
        descriptor,
        subject,
    });
}

/// `samples` random items, indexed from `first_index`.
pub fn random_items(plan: &CorpusPlan, first_index: usize) -> Result<Vec<CorpusItem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    let mut out = Vec::with_capacity(plan.samples);
    for k in 0..plan.samples {
        let index = first_index + k;
        let sub_seed: u64 = rng.gen();
        let item = match plan.random {
            RandomKind::Gnp | RandomKind::GapFree => {
                let n = plan.nmax + 1 + rng.gen_range(0..2);
                let spec = if plan.random == RandomKind::Gnp {
                    let p = GNP_PROBABILITIES[k % GNP_PROBABILITIES.len()];
                    GraphSpec::Gnp { n, p, seed: sub_seed }
                } else {
                    let p = GAPFREE_PROBABILITIES[k % GAPFREE_PROBABILITIES.len()];
                    GraphSpec::GapFreeRandom { n, p, seed: sub_seed }
                };
                CorpusItem {
                    index,
                    descriptor: spec.to_string(),
                    subject: Subject::Graph(spec.build()?),
                }
            }
            RandomKind::SquarefreeIdeal => {
                let n = rng.gen_range(2..=plan.nmax.clamp(2, MAX_LABELED_N));
                let ideal = random_squarefree_ideal(n, &mut ChaCha8Rng::seed_from_u64(sub_seed));
                CorpusItem {
                    index,
                    descriptor: format!("ideal:{n}:{ideal}"),
                    subject: Subject::Ideal(ideal),
                }
            }
        };
        out.push(item);
    }
    Ok(out)
}

/// Nonzero proper squarefree ideal with 1 to 6 generators of degree 1 to 3.
pub fn random_squarefree_ideal(n: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=6);
        let sets: Vec<u64> = (0..count)
            .map(|_| {
                let size = rng.gen_range(1..=n.min(3)) as u32;
                let mut set: u64 = 0;
                while set.count_ones() < size {
                    set |= bits::bit(rng.gen_range(0..n));
                }
                set
            })
            .collect();
        let ideal = MonomialIdeal::from_sets(n, &sets);
        // Ideals generated by variables alone are too degenerate to be useful.
        if ideal.gens().iter().any(|g| g.degree() > 1) {
            return ideal;
        }
    }
}
