//! Properties of first coefficient ideals.

mod common;

use common::*;
use jcoef::analysis::{fci_contains, first_coefficient_ideal, integral_closure, is_reduction};
use jcoef::invariants::generalized_coefficients;
use jcoef::{count_between, FitConfig, Monomial, MonomialIdeal, ScaledSum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn example() -> MonomialIdeal {
    ideal(3, &[vec![5, 0, 0], vec![0, 3, 0], vec![1, 1, 2]])
}

#[test]
fn fci_commutes_with_permuting_variables() {
    let cfg = FitConfig::default();
    let i = example();
    let base = first_coefficient_ideal(&i, None, &cfg).unwrap().fci;
    for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
        let permuted = first_coefficient_ideal(&i.permute(&perm), None, &cfg).unwrap().fci;
        assert_eq!(permuted, base.permute(&perm), "{perm:?}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..4 {
        let i = random_m_primary(&mut rng, 2, 4);
        let base = first_coefficient_ideal(&i, None, &cfg).unwrap().fci;
        let swapped = first_coefficient_ideal(&i.permute(&[1, 0]), None, &cfg).unwrap().fci;
        assert_eq!(swapped, base.permute(&[1, 0]), "{i}");
    }
}

#[test]
fn accepted_candidates_stay_accepted_under_multiplication() {
    let cfg = FitConfig::default();
    let i = example();
    let result = first_coefficient_ideal(&i, None, &cfg).unwrap();
    assert!(!result.accepted.is_empty());
    for u in &result.accepted {
        for t in 0..i.nvars() {
            let v = u.mul(&Monomial::var(t, i.nvars()));
            if !i.contains(&v) {
                assert!(fci_contains(&i, &i.with_generator(v.clone()), &cfg).unwrap(), "{v:?}");
            }
        }
    }
}

#[test]
fn fci_sits_between_ideal_and_closure_and_keeps_leading_coefficients() {
    let cfg = FitConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut corpus = vec![example()];
    corpus.extend((0..5).map(|k| random_m_primary(&mut rng, 2 + k % 2, 3)));
    for i in corpus {
        let fci = first_coefficient_ideal(&i, None, &cfg).unwrap().fci;
        assert!(i.is_subset_of(&fci));
        assert!(fci.is_subset_of(&integral_closure(&i).unwrap()));
        assert!(is_reduction(&i, &fci, 8).unwrap().is_reduction(), "{i}");
        let a = generalized_coefficients(&i, &cfg).unwrap();
        let b = generalized_coefficients(&fci, &cfg).unwrap();
        assert_eq!((a.j0(), a.j1()), (b.j0(), b.j1()), "{i}");
    }
}

#[test]
fn powers_of_fci_are_finitely_far_from_powers_of_ideal() {
    let i = example();
    let j = i.with_generator(Monomial::new(vec![4, 2, 0]));
    for k in 1..=6 {
        let len = count_between(&ScaledSum::of(j.power(k)), &ScaledSum::of(i.power(k))).unwrap();
        assert!(len > 0u32.into(), "J^{k} = I^{k}");
    }
}

#[test]
fn example_second_coefficient_differs() {
    let cfg = FitConfig::default();
    let i = example();
    let j = first_coefficient_ideal(&i, None, &cfg).unwrap().fci;
    let (a, b) = (generalized_coefficients(&i, &cfg).unwrap(), generalized_coefficients(&j, &cfg).unwrap());
    assert_ne!(a.j[2], b.j[2]);
}

#[test]
fn small_degree_bound_is_flagged() {
    let cfg = FitConfig::default();
    let result = first_coefficient_ideal(&example(), Some(6), &cfg).unwrap();
    assert!(!result.complete);
    assert_eq!(result.fci, example().with_generator(Monomial::new(vec![4, 2, 0])));
    let result = first_coefficient_ideal(&example(), Some(5), &cfg).unwrap();
    assert_eq!(result.fci, example());
    assert!(result.complete);
}
