//! Facet-based simplicial complexes on `{0, .., n-1}` and the Stanley-Reisner
//! correspondence with squarefree monomial ideals.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces at
//! all, while the *empty* complex `{∅}` has exactly the empty face. Their
//! reduced homology differs (the empty complex has `H̃_{-1} = k`), so every
//! consumer has to branch on [`ComplexKind`].

use std::fmt;
use std::sync::OnceLock;

use crate::bits::{self, VarSet, MAX_VARS};
use crate::error::{Error, Result};
use crate::homology::{self, HomologyProfile};
use crate::linalg::Field;
use crate::monomial::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// No faces.
    Void,
    /// Only the empty face.
    Empty,
    /// At least one vertex.
    Proper,
}

pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
    faces: OnceLock<Vec<Vec<VarSet>>>,
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal entries are dropped.
    pub fn from_facets(n: usize, facets: Vec<VarSet>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Limit(format!("{n} vertices exceeds {MAX_VARS}")));
        }
        if let Some(&bad) = facets.iter().find(|&&f| !bits::is_subset(f, bits::full(n))) {
            return Err(Error::domain(format!(
                "face {:?} uses vertices outside 1..={n}",
                one_based(bad)
            )));
        }
        Ok(Self::from_maximal(n, bits::maximal_sets(facets)))
    }

    fn from_maximal(n: usize, facets: Vec<VarSet>) -> Self {
        SimplicialComplex {
            n,
            facets,
            faces: OnceLock::new(),
        }
    }

    pub fn void(n: usize) -> Self {
        Self::from_maximal(n, Vec::new())
    }

    pub fn empty(n: usize) -> Self {
        Self::from_maximal(n, vec![0])
    }

    /// The full simplex on `vertices`.
    pub fn simplex(n: usize, vertices: VarSet) -> Self {
        Self::from_maximal(n, vec![vertices])
    }

    /// The boundary of the simplex on `vertices`: all proper subsets.
    pub fn simplex_boundary(n: usize, vertices: VarSet) -> Self {
        if vertices == 0 {
            return Self::void(n);
        }
        let facets = bits::iter(vertices).map(|v| vertices & !bits::bit(v)).collect();
        Self::from_maximal(n, bits::maximal_sets(facets))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [0] => ComplexKind::Empty,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.kind() == ComplexKind::Void
    }

    /// Dimension `max |F| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(face, f))
    }

    /// Faces grouped by size: `faces_by_size()[k]` lists the `(k-1)`-faces in
    /// ascending bitmask order. Computed once per complex.
    pub fn faces_by_size(&self) -> &[Vec<VarSet>] {
        self.faces.get_or_init(|| {
            let Some(dim) = self.dim() else {
                return Vec::new();
            };
            let mut all: Vec<VarSet> = self.facets.iter().flat_map(|&f| bits::subsets(f)).collect();
            all.sort_unstable();
            all.dedup();
            let mut by_size = vec![Vec::new(); (dim + 2) as usize];
            for f in all {
                by_size[f.count_ones() as usize].push(f);
            }
            by_size
        })
    }

    /// All faces, including the empty face when the complex is not void.
    pub fn faces(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.faces_by_size().iter().flatten().copied()
    }

    /// `f_i` counts: `f_vector()[k]` is the number of faces of dimension `k - 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `lk F = { G : F ∪ G ∈ Δ, F ∩ G = ∅ }`.
    pub fn link(&self, face: VarSet) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::domain(format!("{:?} is not a face", one_based(face))));
        }
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: VarSet) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|&&b| bits::is_subset(face, b))
            .map(|&b| b & !face)
            .collect();
        Self::from_maximal(self.n, bits::maximal_sets(facets))
    }

    /// The subcomplex of faces inside `vertices`.
    pub fn restrict(&self, vertices: VarSet) -> SimplicialComplex {
        if self.is_void() {
            return Self::void(self.n);
        }
        let facets = self.facets.iter().map(|&f| f & vertices).collect();
        Self::from_maximal(self.n, bits::maximal_sets(facets))
    }

    /// Whether every facet contains `t`.
    pub fn is_cone_over(&self, t: usize) -> bool {
        !self.facets.is_empty() && self.facets.iter().all(|&f| bits::contains(f, t))
    }

    /// Vertices that every facet contains.
    pub fn cone_points(&self) -> VarSet {
        if self.facets.is_empty() {
            return 0;
        }
        self.facets.iter().fold(bits::full(self.n), |acc, &f| acc & f)
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_n(other)?;
        let facets = self.facets.iter().chain(&other.facets).copied().collect();
        Ok(Self::from_maximal(self.n, bits::maximal_sets(facets)))
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.same_n(other)?;
        let facets = self
            .facets
            .iter()
            .flat_map(|&a| other.facets.iter().map(move |&b| a & b))
            .collect();
        Ok(Self::from_maximal(self.n, bits::maximal_sets(facets)))
    }

    fn same_n(&self, other: &SimplicialComplex) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Reduced homology over `field`.
    pub fn homology(&self, field: Field) -> Result<HomologyProfile> {
        homology::reduced_homology(self, field.validate()?)
    }

    /// Reduced Euler characteristic `Σ (-1)^i f_i` over faces, with `f_{-1}` the
    /// empty face.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        Self::from_maximal(self.n, self.facets.clone())
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<_> = self.facets.iter().map(|&s| one_based(s)).collect();
        write!(f, "Complex(n={}, facets={:?})", self.n, facets)
    }
}

fn one_based(set: VarSet) -> Vec<usize> {
    bits::iter(set).map(|j| j + 1).collect()
}

/// `Δ(I) = { F : x_F ∉ I }`, via complements of minimal transversals of the
/// generator supports. The unit ideal yields the void complex.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::domain("Stanley-Reisner complex needs a squarefree ideal"));
    }
    Ok(complex_of_sets(ideal.n(), &ideal.supports()))
}

/// [`complex_of_ideal`] for an ideal given by squarefree supports.
pub(crate) fn complex_of_sets(n: usize, gens: &[VarSet]) -> SimplicialComplex {
    let full = bits::full(n);
    let facets = bits::minimal_transversals(gens)
        .into_iter()
        .map(|cover| full & !cover)
        .collect();
    SimplicialComplex::from_maximal(n, bits::maximal_sets(facets))
}

/// `I_Δ`, generated by the minimal non-faces.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::domain("the void complex has no Stanley-Reisner ideal"));
    }
    let full = bits::full(complex.n);
    let complements: Vec<VarSet> = complex.facets.iter().map(|&f| full & !f).collect();
    Ok(MonomialIdeal::from_sets(
        complex.n,
        &bits::minimal_transversals(&complements),
    ))
}
