//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b)` with `K^b = {τ ⊆ supp b : x^{b-τ} ∈ I}`.
//! Only multidegrees in the lcm lattice of the generators can carry nonzero
//! Betti numbers, so the lattice is the whole search space.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

/// Default bound on the number of lcm-lattice elements the oracle will visit.
pub const DEFAULT_LATTICE_CAP: usize = 200_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    /// Nonzero entries only.
    entries: BTreeMap<(usize, ExponentVector), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, b: &ExponentVector) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, ExponentVector), &usize)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Graded Betti numbers `β_{i,j}`, coarsened to total degree `j`.
    pub fn totals(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), &beta) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += beta;
        }
        out
    }

    /// Projective dimension of `I`.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }
}

/// Closure of the generators under lcm, sorted by degree then lex.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<ExponentVector>> {
    let gens = ideal.gens();
    let mut seen: BTreeSet<ExponentVector> = gens.iter().cloned().collect();
    let mut frontier: Vec<ExponentVector> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let l = m.lcm(g);
                if !seen.contains(&l) {
                    if seen.len() >= cap {
                        return Err(Error::Limit(format!(
                            "lcm lattice exceeds {cap} elements"
                        )));
                    }
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `K^b(I)`; void when `x^b ∉ I`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &ExponentVector) -> SimplicialComplex {
    let n = ideal.n();
    let faces: Vec<_> = bits::subsets(b.support())
        .filter(|&tau| {
            let rest = b.quotient(&ExponentVector::from_set(n, tau));
            ideal.contains_unchecked(&rest)
        })
        .collect();
    if faces.is_empty() {
        return SimplicialComplex::void(n);
    }
    SimplicialComplex::from_facets(n, bits::maximal_sets(faces)).expect("faces lie in [n]")
}

pub fn betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_oracle_with_cap(ideal, field, DEFAULT_LATTICE_CAP)
}

pub fn betti_oracle_with_cap(ideal: &MonomialIdeal, field: Field, cap: usize) -> Result<BettiTable> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("Betti numbers need a nonzero proper ideal"));
    }
    let field = field.validate()?;
    let lattice = lcm_lattice(ideal, cap)?;
    let entries = lattice
        .par_iter()
        .map(|b| {
            let k = upper_koszul_complex(ideal, b);
            let h = k.homology(field).expect("field validated");
            h.nonzero()
                .map(|(q, d)| (((q + 1) as usize, b.clone()), d))
                .collect::<Vec<_>>()
        })
        .flatten_iter()
        .collect();
    Ok(BettiTable { entries })
}

/// `reg(I) = max { |b| - i : β_{i,b} ≠ 0 }`.
pub fn reg_from_betti(table: &BettiTable) -> Result<u32> {
    table
        .entries
        .keys()
        .map(|(i, b)| b.degree() - *i as u32)
        .max()
        .ok_or_else(|| Error::domain("empty Betti table"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn principal_ideal() {
        let i = MonomialIdeal::parse(2, "x1*x2").unwrap();
        let t = betti_oracle(&i, Field::Gf2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, &ev(&[1, 1])), 1);
        assert_eq!(reg_from_betti(&t).unwrap(), 2);
    }

    #[test]
    fn two_disjoint_edges() {
        let i = MonomialIdeal::parse(4, "x1*x2, x3*x4").unwrap();
        let t = betti_oracle(&i, Field::Gf2).unwrap();
        assert_eq!(t.get(1, &ev(&[1, 1, 1, 1])), 1);
        assert_eq!(t.totals(), BTreeMap::from([((0, 2), 2), ((1, 4), 1)]));
        assert_eq!(reg_from_betti(&t).unwrap(), 3);
    }

    #[test]
    fn pentagon() {
        // Graded Betti numbers of I(C5): 5 quadrics, 5 linear syzygies, one in degree 5.
        let i = generate::cycle(5).unwrap().edge_ideal();
        let t = betti_oracle(&i, Field::Rational).unwrap();
        assert_eq!(t.totals(), BTreeMap::from([((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]));
        assert_eq!(reg_from_betti(&t).unwrap(), 3);
    }

    #[test]
    fn generators_are_degree_zero_entries() {
        let i = MonomialIdeal::parse(3, "x1^2, x1*x2, x2^3*x3").unwrap();
        let t = betti_oracle(&i, Field::Gf2).unwrap();
        let zero: Vec<_> = t.entries().filter(|((k, _), _)| *k == 0).map(|((_, b), _)| b.clone()).collect();
        assert_eq!(zero, i.gens().to_vec());
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let i = generate::complete(6).unwrap().edge_ideal();
        assert!(matches!(lcm_lattice(&i, 10), Err(Error::Limit(_))));
        // Unions of edges in K6: every subset of size >= 2.
        assert_eq!(lcm_lattice(&i, 1000).unwrap().len(), 64 - 7);
    }
}
