//! Castelnuovo-Mumford regularity from degree complexes.
//!
//! For a monomial ideal `I`,
//!
//! ```text
//! reg(S/I) = max { |a| + i : H̃_{i-1}(lk_{Δ_a(I)} F) ≠ 0 for some F ∈ Δ_a(I), F ∩ supp a = ∅ }
//! ```
//!
//! where `Δ_a(I)` is the Stanley-Reisner complex of `sqrt(I : x^a)`. The scan
//! runs over the finite box `Γ(I) = {a : a_j < ρ_j(I)}` and records every
//! maximizing `(a, i, F)` as a [`RegularityCertificate`].

use std::sync::atomic::{AtomicI64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti;
use crate::bits::{self, VarSet};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{ExponentBox, ExponentVector, MonomialIdeal};
use crate::simplicial::{complex_of_sets, SimplicialComplex};

/// The degree complex `Δ_a(I) = Δ(sqrt(I : x^a))`; void when `x^a ∈ I`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<SimplicialComplex> {
    ideal.contains(a)?;
    Ok(complex_of_sets(ideal.n(), &ideal.radical_colon_sets(a)))
}

/// An extremal pair `(a, i)` together with a witnessing face.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegularityCertificate {
    /// `|a| + i`, the contribution to `reg(S/I)`.
    pub value: u32,
    pub a: ExponentVector,
    /// `H̃_{i-1}(lk F) ≠ 0`.
    pub i: u32,
    /// Face of `Δ_a(I)` disjoint from `supp a`.
    pub face: VarSet,
    pub field: Field,
}

/// Outcome of re-checking a certificate from scratch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateAudit {
    pub outside_ideal: bool,
    pub face_avoids_support: bool,
    pub face_in_complex: bool,
    pub homology_nonzero: bool,
    pub not_cone_over_support: bool,
    pub in_gamma_box: bool,
    pub value_consistent: bool,
}

impl CertificateAudit {
    pub fn is_valid(&self) -> bool {
        self.outside_ideal
            && self.face_avoids_support
            && self.face_in_complex
            && self.homology_nonzero
            && self.not_cone_over_support
            && self.in_gamma_box
            && self.value_consistent
    }
}

impl RegularityCertificate {
    /// Recomputes every invariant of the certificate against `ideal`.
    pub fn audit(&self, ideal: &MonomialIdeal) -> Result<CertificateAudit> {
        let mut out = CertificateAudit {
            outside_ideal: !ideal.contains(&self.a)?,
            face_avoids_support: self.face & self.a.support() == 0,
            in_gamma_box: ideal.gamma()?.contains(&self.a),
            value_consistent: self.value == self.a.degree() + self.i,
            ..Default::default()
        };
        if !out.outside_ideal {
            return Ok(out);
        }
        let delta = degree_complex(ideal, &self.a)?;
        out.not_cone_over_support = delta.cone_points() & self.a.support() == 0;
        out.face_in_complex = delta.contains_face(self.face);
        if out.face_in_complex {
            let link = delta.link(self.face)?;
            out.homology_nonzero = link.homology(self.field)?.reduced(self.i as isize - 1) >= 1;
        }
        Ok(out)
    }

    /// Serializable form with 1-based face vertices.
    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            a: self.a.entries().to_vec(),
            i: self.i,
            face: bits::iter(self.face).map(|v| v + 1).collect(),
            value: self.value,
            field: self.field,
        }
    }

    pub fn from_record(rec: &CertificateRecord) -> Result<Self> {
        let n = rec.a.len();
        if rec.face.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::domain("certificate face vertex out of range"));
        }
        Ok(RegularityCertificate {
            value: rec.value,
            a: ExponentVector::new(rec.a.clone()),
            i: rec.i,
            face: bits::from_indices(rec.face.iter().map(|v| v - 1)),
            field: rec.field.validate()?,
        })
    }
}

/// JSON shape `{ "a": [..], "i": int, "F": [..], "value": int, "field": .. }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub a: Vec<u32>,
    pub i: u32,
    #[serde(rename = "F")]
    pub face: Vec<usize>,
    pub value: u32,
    pub field: Field,
}

/// Controls the exponent scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Skip `a` whose degree complex is a cone over a vertex of `supp a`.
    pub prune_cones: bool,
    /// Widen every bound of `Γ(I)` by this much.
    pub box_slack: u32,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            prune_cones: true,
            box_slack: 0,
        }
    }
}

impl ScanOptions {
    /// Unpruned scan over a box one larger than `Γ(I)` in every direction.
    pub fn audit() -> Self {
        ScanOptions {
            prune_cones: false,
            box_slack: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    /// `reg(S/I)`.
    pub quotient: u32,
    /// All maximizing certificates, sorted by `(value, a, i, F)`.
    pub certificates: Vec<RegularityCertificate>,
    pub field: Field,
}

impl Regularity {
    /// `reg(I) = reg(S/I) + 1`.
    pub fn ideal(&self) -> u32 {
        self.quotient + 1
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("regularity needs a nonzero proper ideal"));
    }
    Ok(())
}

/// `reg(I)` with all extremal certificates.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<Regularity> {
    regularity_with(ideal, field, ScanOptions::default())
}

/// `reg(I)` alone.
pub fn reg(ideal: &MonomialIdeal, field: Field) -> Result<u32> {
    Ok(regularity(ideal, field)?.ideal())
}

/// Extremal pairs of `I`: every certificate attaining `reg(S/I)`.
pub fn extremal_pairs(ideal: &MonomialIdeal, field: Field) -> Result<Vec<RegularityCertificate>> {
    Ok(regularity(ideal, field)?.certificates)
}

pub fn regularity_with(ideal: &MonomialIdeal, field: Field, opts: ScanOptions) -> Result<Regularity> {
    require_proper(ideal)?;
    let field = field.validate()?;
    let exponents = scan_box(ideal, opts.box_slack)?;
    let best = AtomicI64::new(-1);
    let mut certificates: Vec<RegularityCertificate> = exponents
        .par_iter()
        .flat_map_iter(|a| scan_exponent(ideal, a, field, opts, &best))
        .collect();
    let quotient = certificates.iter().map(|c| c.value).max().ok_or_else(|| {
        Error::domain("no nonvanishing homology found; is the ideal proper?")
    })?;
    certificates.retain(|c| c.value == quotient);
    certificates.sort();
    Ok(Regularity {
        quotient,
        certificates,
        field,
    })
}

/// Exponents of the (widened) box, high degree first so the running bound
/// tightens early.
fn scan_box(ideal: &MonomialIdeal, slack: u32) -> Result<Vec<ExponentVector>> {
    let gamma: ExponentBox = ideal.gamma()?.widened(slack);
    let mut exps: Vec<ExponentVector> = gamma.iter().collect();
    exps.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
    Ok(exps)
}

fn scan_exponent(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    field: Field,
    opts: ScanOptions,
    best: &AtomicI64,
) -> Vec<RegularityCertificate> {
    let mut found = Vec::new();
    if ideal.contains_unchecked(a) {
        return found;
    }
    let n = ideal.n();
    let supp = a.support();
    let delta = complex_of_sets(n, &ideal.radical_colon_sets(a));
    if opts.prune_cones && delta.cone_points() & supp != 0 {
        return found;
    }
    let deg = i64::from(a.degree());
    // Upper bound for any i here: H̃_{i-1} of a link vanishes above its dimension.
    let dim = delta.dim().unwrap_or(-1) as i64;
    if deg + dim + 1 < best.load(Ordering::Relaxed) {
        return found;
    }
    let allowed = delta.restrict(bits::full(n) & !supp);
    for &face in allowed.faces_by_size().iter().flatten() {
        let link = delta.link_unchecked(face);
        if link.cone_points() != 0 {
            continue;
        }
        let link_dim = link.dim().unwrap_or(-2) as i64;
        if deg + link_dim + 1 < best.load(Ordering::Relaxed) {
            continue;
        }
        let profile = link.homology(field).expect("field validated");
        for (q, _) in profile.nonzero() {
            let i = (q + 1) as u32;
            let value = a.degree() + i;
            best.fetch_max(i64::from(value), Ordering::Relaxed);
            found.push(RegularityCertificate {
                value,
                a: a.clone(),
                i,
                face,
                field,
            });
        }
    }
    let floor = best.load(Ordering::Relaxed);
    found.retain(|c| i64::from(c.value) >= floor);
    found
}

/// Compares the default scan with [`ScanOptions::audit`].
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub primary: Regularity,
    pub audit: Regularity,
}

impl AuditReport {
    pub fn agree(&self) -> bool {
        self.primary.quotient == self.audit.quotient
    }
}

pub fn regularity_audit(ideal: &MonomialIdeal, field: Field) -> Result<AuditReport> {
    Ok(AuditReport {
        primary: regularity(ideal, field)?,
        audit: regularity_with(ideal, field, ScanOptions::audit())?,
    })
}

/// Both decisions for "has a linear resolution".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearityCheck {
    /// Common generator degree, if the ideal is equigenerated.
    pub degree: Option<u32>,
    /// Equigenerated in degree `d` and `reg I = d`.
    pub via_regularity: bool,
    /// Every nonzero `β_{i,b}` has `|b| = i + d`.
    pub via_betti: bool,
}

impl LinearityCheck {
    pub fn agree(&self) -> bool {
        self.via_regularity == self.via_betti
    }
}

/// Linear resolution decided from the degree-complex regularity.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    require_proper(ideal)?;
    match ideal.generating_degree() {
        Some(d) => Ok(reg(ideal, field)? == d),
        None => Ok(false),
    }
}

/// Linear resolution decided from the multigraded Betti numbers.
pub fn has_linear_resolution_betti(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    require_proper(ideal)?;
    let Some(d) = ideal.generating_degree() else {
        return Ok(false);
    };
    let table = betti::betti_oracle(ideal, field)?;
    let linear = table.entries().all(|((i, b), _)| b.degree() == *i as u32 + d);
    Ok(linear)
}

pub fn linearity_check(ideal: &MonomialIdeal, field: Field) -> Result<LinearityCheck> {
    Ok(LinearityCheck {
        degree: ideal.generating_degree(),
        via_regularity: has_linear_resolution(ideal, field)?,
        via_betti: has_linear_resolution_betti(ideal, field)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::power::symbolic_power_of_graph;
    use crate::simplicial::ComplexKind;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, text).unwrap()
    }

    #[test]
    fn degree_complex_examples() {
        let p3 = generate::path(3).unwrap().edge_ideal();
        let d0 = degree_complex(&p3, &ev(&[0, 0, 0])).unwrap();
        assert_eq!(d0, crate::simplicial::complex_of_ideal(&p3).unwrap());
        // sqrt(I(P3) : x2) = (x1, x3), whose complex is {∅, {2}}.
        let d = degree_complex(&p3, &ev(&[0, 1, 0])).unwrap();
        assert_eq!(d.facets(), &[0b010]);
        assert!(degree_complex(&p3, &ev(&[1, 1, 0])).unwrap().is_void());
        let c5 = generate::cycle(5).unwrap();
        let s2 = symbolic_power_of_graph(&c5, 2).unwrap();
        let base = crate::simplicial::complex_of_ideal(&c5.edge_ideal()).unwrap();
        for j in 0..5 {
            let a = ExponentVector::unit(5, j);
            assert_eq!(degree_complex(&s2, &a).unwrap(), base);
        }
        assert_eq!(
            degree_complex(&ideal(2, "x1, x2"), &ev(&[0, 0])).unwrap().kind(),
            ComplexKind::Empty
        );
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(reg(&ideal(2, "x1*x2"), Field::Gf2).unwrap(), 2);
        let two_k2 = ideal(4, "x1*x2, x3*x4");
        assert_eq!(reg(&two_k2, Field::Gf2).unwrap(), 3);
        assert_eq!(reg(&generate::cycle(5).unwrap().edge_ideal(), Field::Gf2).unwrap(), 3);
        assert_eq!(reg(&ideal(2, "x1, x2"), Field::Rational).unwrap(), 1);
        assert!(reg(&MonomialIdeal::zero(3), Field::Gf2).is_err());
        assert!(reg(&MonomialIdeal::unit(3), Field::Gf2).is_err());
    }

    #[test]
    fn non_squarefree_regularity() {
        // Powers of the maximal ideal have linear resolutions.
        let m = ideal(3, "x1, x2, x3");
        for s in 1..=3 {
            assert_eq!(reg(&m.power(s), Field::Gf2).unwrap(), s);
        }
        // (x1^2, x1*x2^3): reg = 4 since x1*x2^3 is a generator of degree 4 and
        // the single syzygy sits in degree 5.
        assert_eq!(reg(&ideal(2, "x1^2, x1*x2^3"), Field::Gf2).unwrap(), 4);
    }

    #[test]
    fn certificates_are_valid() {
        for g in [generate::cycle(5).unwrap(), generate::complete(3).unwrap()] {
            for s in 1..=2 {
                let i = symbolic_power_of_graph(&g, s).unwrap();
                let r = regularity(&i, Field::Gf2).unwrap();
                assert!(!r.certificates.is_empty());
                for c in &r.certificates {
                    assert!(c.audit(&i).unwrap().is_valid(), "{c:?}");
                    assert_eq!(c.value, r.quotient);
                }
            }
        }
    }

    #[test]
    fn squarefree_certificate_at_zero() {
        let two_k2 = ideal(4, "x1*x2, x3*x4");
        let certs = extremal_pairs(&two_k2, Field::Gf2).unwrap();
        assert!(certs.iter().all(|c| c.a.is_one()));
    }

    #[test]
    fn audit_scan_agrees() {
        let c5 = generate::cycle(5).unwrap();
        let i2 = symbolic_power_of_graph(&c5, 2).unwrap();
        let rep = regularity_audit(&i2, Field::Gf2).unwrap();
        assert!(rep.agree());
    }

    #[test]
    fn linearity_examples() {
        let c4 = generate::cycle(4).unwrap().edge_ideal();
        let chk = linearity_check(&c4, Field::Gf2).unwrap();
        assert!(chk.via_regularity && chk.agree());
        let two_k2 = ideal(4, "x1*x2, x3*x4");
        assert!(!has_linear_resolution(&two_k2, Field::Gf2).unwrap());
        assert!(!has_linear_resolution_betti(&two_k2, Field::Gf2).unwrap());
        let c5sq = generate::cycle(5).unwrap().edge_ideal().power(2);
        let chk = linearity_check(&c5sq, Field::Gf2).unwrap();
        assert!(chk.via_regularity && chk.agree());
        assert!(!has_linear_resolution(&ideal(2, "x1, x2^2"), Field::Gf2).unwrap());
    }

    #[test]
    fn certificate_record_round_trip() {
        let c = RegularityCertificate {
            value: 3,
            a: ev(&[1, 0, 1]),
            i: 1,
            face: 0b010,
            field: Field::Gfp(3),
        };
        let json = serde_json::to_string(&c.to_record()).unwrap();
        assert_eq!(json, r#"{"a":[1,0,1],"i":1,"F":[2],"value":3,"field":"gfp:3"}"#);
        let back: CertificateRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(RegularityCertificate::from_record(&back).unwrap(), c);
    }
}
