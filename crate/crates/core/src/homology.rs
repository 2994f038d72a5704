//! Reduced simplicial homology from exact boundary-matrix ranks.
//!
//! Faces are oriented by ascending vertex order and `∂[v0..vk] = Σ (-1)^j [.. v̂j ..]`;
//! the augmentation sends every vertex to the empty face.

use serde::Serialize;

use crate::bits::{self, VarSet};
use crate::error::Result;
use crate::linalg::{Field, SparseColumns};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `dims[k] = dim H̃_{k-1}` for `k - 1` in `-1..=dim Δ`; empty for the void complex.
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn reduced(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(i, dim H̃_i)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    /// Largest `i` with `H̃_i ≠ 0`.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.dims.iter().rposition(|&d| d > 0).map(|k| k as isize - 1)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

pub(crate) fn reduced_homology(complex: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    let by_size = complex.faces_by_size();
    if by_size.is_empty() {
        return Ok(HomologyProfile {
            field,
            dims: Vec::new(),
        });
    }
    // ranks[k] = rank of ∂ from size-k faces to size-(k-1) faces; ranks[0] = 0.
    let mut ranks = vec![0usize; by_size.len() + 1];
    for k in 1..by_size.len() {
        ranks[k] = boundary_matrix(&by_size[k - 1], &by_size[k]).rank(field);
    }
    let dims = (0..by_size.len())
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    Ok(HomologyProfile { field, dims })
}

/// Boundary map from `upper` (faces of size k) to `lower` (size k-1), both sorted.
pub fn boundary_matrix(lower: &[VarSet], upper: &[VarSet]) -> SparseColumns {
    let mut m = SparseColumns::new(lower.len());
    for &face in upper {
        let col = bits::iter(face)
            .enumerate()
            .map(|(pos, v)| {
                let row = lower
                    .binary_search(&(face & !bits::bit(v)))
                    .expect("complex is closed under subsets");
                (row, if pos % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        m.push_column(col);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn empty_complex_has_only_minus_one() {
        for field in [Field::Gf2, Field::Gfp(3), Field::Rational] {
            let h = SimplicialComplex::empty(3).homology(field).unwrap();
            assert_eq!(h.reduced(-1), 1);
            assert_eq!(h.nonzero().count(), 1);
        }
    }

    #[test]
    fn void_is_acyclic() {
        let h = SimplicialComplex::void(3).homology(Field::Gf2).unwrap();
        assert!(h.is_acyclic());
        assert_eq!(h.reduced(-1), 0);
    }

    #[test]
    fn triangle_boundary() {
        let h = SimplicialComplex::simplex_boundary(3, 0b111)
            .homology(Field::Rational)
            .unwrap();
        assert_eq!(h.reduced(0), 0);
        assert_eq!(h.reduced(1), 1);
        assert_eq!(h.reduced(-1), 0);
    }

    #[test]
    fn cones_are_acyclic() {
        let c = SimplicialComplex::from_facets(4, vec![0b0011, 0b0101, 0b1001]).unwrap();
        assert!(c.is_cone_over(0));
        assert!(c.homology(Field::Gf2).unwrap().is_acyclic());
    }

    #[test]
    fn rejects_non_prime_field() {
        assert!(SimplicialComplex::empty(1).homology(Field::Gfp(6)).is_err());
    }

    #[test]
    fn two_points_have_one_component_extra() {
        let c = SimplicialComplex::from_facets(2, vec![0b01, 0b10]).unwrap();
        let h = c.homology(Field::Gf2).unwrap();
        assert_eq!(h.reduced(0), 1);
        assert_eq!(h.top_nonzero(), Some(0));
    }
}
