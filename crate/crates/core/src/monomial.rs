//! Monomials as exponent vectors and monomial ideals by minimal generators.
//!
//! Variables are indexed from 0 internally; the text form `x1^2*x3` is 1-based.

use std::fmt;
use std::str::FromStr;

use crate::bits::{self, VarSet, MAX_VARS};
use crate::error::{Error, Result};

/// A point of `N^n`, read as the monomial `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The variable `x_j` (0-based).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        ExponentVector(v)
    }

    /// The squarefree monomial `x_F`.
    pub fn from_set(n: usize, set: VarSet) -> Self {
        ExponentVector((0..n).map(|j| u32::from(bits::contains(set, j))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Exponent of `x_j`.
    pub fn deg(&self, j: usize) -> u32 {
        self.0[j]
    }

    /// Total degree `|a|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `supp(a)` as a bitmask. Requires `len() <= 64`.
    pub fn support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (j, _)| acc | bits::bit(j))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `x^self | x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// Product of monomials: componentwise sum.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `x^self / gcd(x^self, x^other)`, i.e. the componentwise truncated difference.
    pub fn quotient(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Keeps the exponents on `set`, zeroing the rest.
    pub fn restrict(&self, set: VarSet) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .enumerate()
                .map(|(j, &e)| if bits::contains(set, j) { e } else { 0 })
                .collect(),
        )
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    /// Parses `x1^2*x3` (1-based) over `n` variables; `1` is the unit monomial.
    pub fn parse(n: usize, text: &str) -> Result<ExponentVector> {
        let mut exps = vec![0u32; n];
        let text = text.trim();
        if text == "1" {
            return Ok(ExponentVector(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| bad_monomial(text))?),
                None => (factor, 1),
            };
            let idx: usize = var
                .trim()
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| bad_monomial(text))?;
            if idx == 0 || idx > n {
                return Err(Error::domain(format!("variable x{idx} out of range 1..={n}")));
            }
            exps[idx - 1] += exp;
        }
        Ok(ExponentVector(exps))
    }
}

fn bad_monomial(text: &str) -> Error {
    Error::domain(format!("malformed monomial {text:?}"))
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", j + 1)?,
                _ => write!(f, "x{}^{}", j + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// The coefficient-free partial derivative of `x^f` by `x^a`: `x^(f-a)` when
/// `x^a | x^f`, and `None` (the zero polynomial) otherwise.
pub fn star_partial(f: &ExponentVector, a: &ExponentVector) -> Result<Option<ExponentVector>> {
    a.check_len(f.len())?;
    Ok(f.checked_div(a))
}

/// A monomial ideal stored by its minimal generators, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal ones.
    pub fn new(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Limit(format!("{n} variables exceeds {MAX_VARS}")));
        }
        for g in &gens {
            g.check_len(n)?;
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    /// Builds from squarefree supports.
    pub fn from_sets(n: usize, sets: &[VarSet]) -> Self {
        let gens = bits::minimal_sets(sets.to_vec())
            .into_iter()
            .map(|s| ExponentVector::from_set(n, s))
            .collect::<Vec<_>>();
        MonomialIdeal::from_minimal(n, gens)
    }

    /// Builds from generators already known to form an antichain.
    fn from_minimal(n: usize, mut gens: Vec<ExponentVector>) -> Self {
        gens.sort_unstable();
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![ExponentVector::zeros(n)],
        }
    }

    /// Parses whitespace/comma separated monomials in the `x1^2*x3` form.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let gens = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| ExponentVector::parse(n, t))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(ExponentVector::is_squarefree)
    }

    /// Generator supports; meaningful as the ideal itself only when squarefree.
    pub fn supports(&self) -> Vec<VarSet> {
        self.gens.iter().map(ExponentVector::support).collect()
    }

    /// Common degree of all generators, if there is one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        a.check_len(self.n)?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)))
            .collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `I^s` by iterated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..s {
            acc = acc.multiply(self).expect("same ambient ring");
        }
        acc
    }

    /// `I : x^a`.
    pub fn colon(&self, a: &ExponentVector) -> Result<MonomialIdeal> {
        a.check_len(self.n)?;
        let gens = self.gens.iter().map(|g| g.quotient(a)).collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::from_sets(self.n, &self.supports())
    }

    /// `sqrt(I : x^a)`, generated by the supports of `g / gcd(g, x^a)`.
    pub fn radical_colon(&self, a: &ExponentVector) -> Result<MonomialIdeal> {
        a.check_len(self.n)?;
        Ok(MonomialIdeal::from_sets(self.n, &self.radical_colon_sets(a)))
    }

    /// Minimal supports of `sqrt(I : x^a)`, without building an ideal.
    pub(crate) fn radical_colon_sets(&self, a: &ExponentVector) -> Vec<VarSet> {
        let sets = self
            .gens
            .iter()
            .map(|g| {
                g.0.iter()
                    .zip(&a.0)
                    .enumerate()
                    .filter(|(_, (&ge, &ae))| ge > ae)
                    .fold(0u64, |acc, (j, _)| acc | bits::bit(j))
            })
            .collect();
        bits::minimal_sets(sets)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)))
            .collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `rho_j(I)`: the largest exponent of `x_j` among minimal generators.
    pub fn rho(&self) -> Vec<u32> {
        (0..self.n)
            .map(|j| self.gens.iter().map(|g| g.deg(j)).max().unwrap_or(0))
            .collect()
    }

    /// The box `{a : a_j < rho_j(I)}`, with `a_j = 0` wherever `rho_j(I) = 0`.
    pub fn gamma(&self) -> Result<ExponentBox> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::domain("Gamma(I) needs a nonzero proper ideal"));
        }
        Ok(ExponentBox::new(
            self.rho().into_iter().map(|r| r.saturating_sub(1)).collect(),
        ))
    }

    /// `(rho, Gamma(I))` together.
    pub fn rho_gamma(&self) -> Result<(Vec<u32>, ExponentBox)> {
        Ok((self.rho(), self.gamma()?))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    /// Plain comma-separated exponents, e.g. `2,0,1`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ExponentVector)
            .map_err(|_| Error::domain(format!("malformed exponent vector {s:?}")))
    }
}

/// Inclusion-minimal antichain of `gens`, sorted lexicographically.
pub fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<(VarSet, ExponentVector)> = Vec::with_capacity(gens.len());
    for g in gens {
        let supp = g.support();
        if !kept
            .iter()
            .any(|(ks, k)| bits::is_subset(*ks, supp) && k.divides(&g))
        {
            kept.push((supp, g));
        }
    }
    let mut out: Vec<_> = kept.into_iter().map(|(_, g)| g).collect();
    out.sort_unstable();
    out
}

/// Checked form of [`minimalize`] that verifies a common length.
pub fn minimalize_checked(n: usize, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, gens)
}

/// The lattice box `{a : 0 <= a_j <= upper_j}`, iterated in lexicographic order.
#[derive(Clone, Debug)]
pub struct ExponentBox {
    upper: Vec<u32>,
}

impl ExponentBox {
    pub fn new(upper: Vec<u32>) -> Self {
        ExponentBox { upper }
    }

    pub fn upper(&self) -> &[u32] {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.upper.iter().map(|&u| u as usize + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        a.len() == self.upper.len() && a.0.iter().zip(&self.upper).all(|(x, u)| x <= u)
    }

    /// Widens every bound by `slack`.
    pub fn widened(&self, slack: u32) -> ExponentBox {
        ExponentBox::new(self.upper.iter().map(|u| u + slack).collect())
    }

    pub fn iter(&self) -> BoxIter {
        BoxIter {
            upper: self.upper.clone(),
            next: Some(vec![0; self.upper.len()]),
        }
    }
}

impl IntoIterator for &ExponentBox {
    type Item = ExponentVector;
    type IntoIter = BoxIter;

    fn into_iter(self) -> BoxIter {
        self.iter()
    }
}

pub struct BoxIter {
    upper: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut j = succ.len();
        let mut advanced = false;
        while j > 0 {
            j -= 1;
            if succ[j] < self.upper[j] {
                succ[j] += 1;
                advanced = true;
                break;
            }
            succ[j] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(ExponentVector(cur))
    }
}

/// All exponent vectors `b <= bound` componentwise with `|b| <= max_degree`.
pub fn bounded_subvectors(bound: &ExponentVector, max_degree: u32) -> Vec<ExponentVector> {
    fn walk(bound: &[u32], j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if j == bound.len() {
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in 0..=bound[j].min(left) {
            cur.push(e);
            walk(bound, j + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(&bound.0, 0, max_degree, &mut Vec::with_capacity(bound.len()), &mut out);
    out
}

/// All monomials in `n` variables of total degree at most `max_degree`.
pub fn monomials_up_to_degree(n: usize, max_degree: u32) -> Vec<ExponentVector> {
    bounded_subvectors(&ExponentVector(vec![max_degree; n]), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, text).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(3, "x1*x2, x1*x2*x3"), ideal(3, "x1*x2"));
        assert!(MonomialIdeal::new(3, vec![]).unwrap().is_zero());
        let i = ideal(2, "x1^2, x1*x2, x2^2");
        assert_eq!(i.num_gens(), 3);
    }

    #[test]
    fn minimalize_rejects_mismatched_lengths() {
        let err = MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 3 });
    }

    #[test]
    fn power_examples() {
        assert_eq!(ideal(2, "x1*x2").power(2), ideal(2, "x1^2*x2^2"));
        // (x1x2, x2x3)^2: products x1^2x2^2, x1x2^2x3, x2^2x3^2; none divides another.
        assert_eq!(
            ideal(3, "x1*x2, x2*x3").power(2),
            ideal(3, "x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2")
        );
        let i = ideal(3, "x1*x2, x2*x3");
        assert_eq!(i.power(1), i);
        assert!(i.power(0).is_unit());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, "x1*x2, x2*x3");
        assert_eq!(i.colon(&ev(&[0, 1, 0])).unwrap(), ideal(3, "x1, x3"));
        assert_eq!(i.colon(&ev(&[0, 0, 0])).unwrap(), i);
        assert_eq!(
            ideal(2, "x1^2*x2^2").colon(&ev(&[1, 1])).unwrap(),
            ideal(2, "x1*x2")
        );
        assert!(i.colon(&ev(&[1, 0])).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(ideal(2, "x1^2*x2^2").radical(), ideal(2, "x1*x2"));
        let sf = ideal(3, "x1*x2, x2*x3");
        assert_eq!(sf.radical(), sf);
        assert_eq!(ideal(2, "x1^2, x2^3").radical(), ideal(2, "x1, x2"));
    }

    #[test]
    fn radical_colon_examples() {
        let i = ideal(3, "x1*x2, x2*x3");
        assert_eq!(i.radical_colon(&ev(&[0, 2, 0])).unwrap(), ideal(3, "x1, x3"));
        assert_eq!(i.radical_colon(&ev(&[0, 0, 0])).unwrap(), i.radical());
        assert_eq!(
            ideal(2, "x1^2*x2^2").radical_colon(&ev(&[2, 0])).unwrap(),
            ideal(2, "x2")
        );
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            ideal(2, "x1").intersect(&ideal(2, "x2")).unwrap(),
            ideal(2, "x1*x2")
        );
        let i = ideal(3, "x1*x2, x2^2*x3");
        assert_eq!(i.intersect(&i).unwrap(), i);
        let p12 = ideal(3, "x1, x2").power(2);
        let p13 = ideal(3, "x1, x3").power(2);
        let p23 = ideal(3, "x2, x3").power(2);
        let all = p12.intersect(&p13).unwrap().intersect(&p23).unwrap();
        assert!(all.contains(&ev(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, "x1*x2");
        assert!(i.contains(&ev(&[1, 1, 1])).unwrap());
        assert!(!i.contains(&ev(&[1, 0, 0])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&ev(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn rho_gamma_examples() {
        let (rho, gamma) = ideal(2, "x1^2*x2^2").rho_gamma().unwrap();
        assert_eq!(rho, vec![2, 2]);
        assert_eq!(gamma.iter().count(), 4);

        let (_, gamma) = ideal(3, "x1*x2, x2*x3").rho_gamma().unwrap();
        assert_eq!(gamma.iter().collect::<Vec<_>>(), vec![ev(&[0, 0, 0])]);

        // x3 divides no generator: rho_3 = 0 pins a_3 = 0.
        let (rho, gamma) = ideal(3, "x1^3*x2").rho_gamma().unwrap();
        assert_eq!(rho, vec![3, 1, 0]);
        assert_eq!(gamma.iter().count(), 3);

        assert!(MonomialIdeal::zero(2).gamma().is_err());
        assert!(MonomialIdeal::unit(2).gamma().is_err());
    }

    #[test]
    fn star_partial_examples() {
        assert_eq!(star_partial(&ev(&[2, 1]), &ev(&[1, 0])).unwrap(), Some(ev(&[1, 1])));
        assert_eq!(star_partial(&ev(&[1, 0]), &ev(&[0, 1])).unwrap(), None);
        assert_eq!(star_partial(&ev(&[2, 1]), &ev(&[0, 0])).unwrap(), Some(ev(&[2, 1])));
    }

    #[test]
    fn text_forms_round_trip() {
        let m = ExponentVector::parse(3, "x1^2*x3").unwrap();
        assert_eq!(m, ev(&[2, 0, 1]));
        assert_eq!(m.to_string(), "x1^2*x3");
        assert!(ExponentVector::parse(3, "x4").is_err());
        assert!(ExponentVector::parse(3, "y1").is_err());
        assert_eq!(ExponentVector::parse(2, "1").unwrap(), ev(&[0, 0]));
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n + d, d) monomials of degree <= d in n variables.
        assert_eq!(monomials_up_to_degree(3, 2).len(), 10);
        assert_eq!(monomials_up_to_degree(5, 8).len(), 1287);
    }
}
