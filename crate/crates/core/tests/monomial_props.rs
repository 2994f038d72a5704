mod common;

use common::{exponent, monomial_ideal, squarefree_ideal};
use proptest::prelude::*;
use regpow_core::monomial::minimalize;
use regpow_core::{ExponentVector, MonomialIdeal};

const N: usize = 4;

fn pow(f: &ExponentVector, k: u32) -> ExponentVector {
    ExponentVector::new(f.entries().iter().map(|e| e * k).collect())
}

proptest! {
    #[test]
    fn radical_colon_is_radical_of_colon(i in monomial_ideal(N, 5, 3), a in exponent(N, 3)) {
        prop_assert_eq!(i.radical_colon(&a).unwrap(), i.colon(&a).unwrap().radical());
    }

    #[test]
    fn iterated_colon(i in monomial_ideal(N, 5, 3), a in exponent(N, 2), b in exponent(N, 2)) {
        let lhs = i.colon(&a).unwrap().colon(&b).unwrap();
        prop_assert_eq!(lhs, i.colon(&a.mul(&b)).unwrap());
    }

    #[test]
    fn colon_membership(i in monomial_ideal(N, 5, 3), a in exponent(N, 2), f in exponent(N, 4)) {
        let c = i.colon(&a).unwrap();
        prop_assert_eq!(c.contains(&f).unwrap(), i.contains(&f.mul(&a)).unwrap());
    }

    #[test]
    fn radical_membership(i in monomial_ideal(N, 4, 3), f in exponent(N, 2)) {
        // f ∈ sqrt(I) iff f^k ∈ I for k at least the largest exponent in I.
        let r = i.radical();
        prop_assert_eq!(r.contains(&f).unwrap(), i.contains(&pow(&f, 3)).unwrap());
    }

    #[test]
    fn powers_descend(i in monomial_ideal(N, 4, 2), s in 2u32..4) {
        let lower = i.power(s - 1);
        let upper = i.power(s);
        for g in upper.gens() {
            prop_assert!(lower.contains(g).unwrap());
        }
        prop_assert!(upper.is_subset_of(&lower).unwrap());
    }

    #[test]
    fn power_agrees_with_repeated_product(i in monomial_ideal(N, 4, 2)) {
        prop_assert_eq!(i.power(3), i.multiply(&i).unwrap().multiply(&i).unwrap());
    }

    #[test]
    fn intersect_laws(
        i in monomial_ideal(N, 4, 3),
        j in monomial_ideal(N, 4, 3),
        k in monomial_ideal(N, 4, 3),
        f in exponent(N, 4),
    ) {
        let ij = i.intersect(&j).unwrap();
        prop_assert_eq!(&ij, &j.intersect(&i).unwrap());
        prop_assert_eq!(
            ij.intersect(&k).unwrap(),
            i.intersect(&j.intersect(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(ij.contains(&f).unwrap(), i.contains(&f).unwrap() && j.contains(&f).unwrap());
        // Monotone: I ∩ J ⊆ I + K ∩ J.
        let wider = i.sum(&k).unwrap().intersect(&j).unwrap();
        prop_assert!(ij.is_subset_of(&wider).unwrap());
    }

    #[test]
    fn minimalize_is_idempotent(gens in prop::collection::vec(exponent(N, 3), 0..8)) {
        let once = minimalize(gens);
        prop_assert_eq!(minimalize(once.clone()), once.clone());
        let i = MonomialIdeal::new(N, once.clone()).unwrap();
        prop_assert_eq!(i.gens(), &once[..]);
    }

    #[test]
    fn minimal_generators_form_an_antichain(i in monomial_ideal(N, 6, 3)) {
        for (x, g) in i.gens().iter().enumerate() {
            for (y, h) in i.gens().iter().enumerate() {
                prop_assert!(x == y || !g.divides(h));
            }
        }
    }

    #[test]
    fn sum_membership(i in squarefree_ideal(N, 4), j in squarefree_ideal(N, 4), f in exponent(N, 2)) {
        let s = i.sum(&j).unwrap();
        prop_assert_eq!(s.contains(&f).unwrap(), i.contains(&f).unwrap() || j.contains(&f).unwrap());
    }

    #[test]
    fn gamma_box_matches_rho(i in monomial_ideal(N, 4, 3)) {
        prop_assume!(!i.is_unit());
        let (rho, gamma) = i.rho_gamma().unwrap();
        let expected: usize = rho.iter().map(|&r| r.max(1) as usize).product();
        prop_assert_eq!(gamma.iter().count(), expected);
        for a in gamma.iter() {
            for (j, &r) in rho.iter().enumerate() {
                prop_assert!(a.deg(j) < r.max(1));
            }
        }
    }
}

#[test]
fn rho_gamma_examples() {
    let i = MonomialIdeal::parse(2, "x1^2*x2^2").unwrap();
    let (rho, gamma) = i.rho_gamma().unwrap();
    assert_eq!(rho, vec![2, 2]);
    assert_eq!(gamma.iter().count(), 4);
    let p3 = MonomialIdeal::parse(3, "x1*x2, x2*x3").unwrap();
    let (rho, gamma) = p3.rho_gamma().unwrap();
    assert_eq!(rho, vec![1, 1, 1]);
    assert_eq!(gamma.iter().collect::<Vec<_>>(), vec![ExponentVector::zeros(3)]);
    assert!(MonomialIdeal::zero(2).rho_gamma().is_err());
}
