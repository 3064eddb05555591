mod common;

use common::*;
use proptest::prelude::*;
use ringlab_core::construct::{
    b_ring, h3, radical_formula_check_h3, radical_formula_check_skew, radical_formula_check_tn,
    s_ring, skew_upper_triangular, t_ring, upper_triangular,
};
use ringlab_core::ideal::{enumerate_ideals, quotient};
use ringlab_core::radical::{
    class_predicates, is_dedekind_finite, is_two_primal, lower_nilradical_msequence,
    lower_nilradical_primes, nilpotents as lib_nilpotents, semicommutative_witness,
    upper_nilradical,
};
use ringlab_core::ring::Endomorphism;
use ringlab_core::FiniteRing;

fn radical_rings() -> Vec<FiniteRing> {
    let mut v = small_rings();
    let id = Endomorphism::identity(&z(2));
    let s = z2xz2();
    v.extend([
        z(12),
        upper_triangular(&z(2), 3).unwrap().ring,
        h3(&z(2)).unwrap().ring,
        s_ring(&z(2), 3, &id).unwrap().ring,
        t_ring(&z(2), 3, &id).unwrap().ring,
        b_ring(&z(2), 4, &id).unwrap().ring,
        skew_upper_triangular(&s, 2, &swap(&s)).unwrap().ring,
    ]);
    v
}

#[test]
fn both_lower_radical_algorithms_match_the_prime_ideal_oracle() {
    for r in radical_rings() {
        let oracle = lower_radical(&r);
        assert_eq!(
            to_set(&lower_nilradical_msequence(&r)),
            oracle,
            "m-sequence on {}",
            r.name()
        );
        assert_eq!(
            to_set(&lower_nilradical_primes(&r).unwrap()),
            oracle,
            "primes on {}",
            r.name()
        );
    }
}

#[test]
fn upper_radical_and_nilpotents_match_the_oracle() {
    for r in radical_rings() {
        assert_eq!(to_set(&lib_nilpotents(&r)), nilpotents(&r), "{}", r.name());
        assert_eq!(
            to_set(&upper_nilradical(&r).unwrap()),
            upper_radical(&r),
            "{}",
            r.name()
        );
    }
}

#[test]
fn radical_chain_and_finite_collapse() {
    for r in radical_rings() {
        let (lo, up, nil) = (lower_radical(&r), upper_radical(&r), nilpotents(&r));
        assert!(lo.is_subset(&up) && up.is_subset(&nil), "{}", r.name());
        // a nil ideal of a finite ring is nilpotent, hence inside every prime
        assert_eq!(lo, up, "{}", r.name());
    }
}

#[test]
fn ideal_enumeration_matches_the_oracle() {
    for r in radical_rings().into_iter().filter(|r| r.order() <= 32) {
        let mut lib: Vec<Set> = enumerate_ideals(&r)
            .unwrap()
            .iter()
            .map(|i| to_set(i.members()))
            .collect();
        lib.sort();
        assert_eq!(lib, all_ideals(&r), "{}", r.name());
    }
}

#[test]
fn class_predicates_agree_with_definitions() {
    for r in radical_rings() {
        let nil = nilpotents(&r);
        let semicommutative = r.elements().all(|a| {
            r.elements().all(|b| {
                r.mul(a, b) != r.zero() || r.elements().all(|x| r.mul(r.mul(a, x), b) == r.zero())
            })
        });
        let two_primal = lower_radical(&r) == nil;
        let dedekind = r.elements().all(|a| {
            r.elements()
                .all(|b| r.mul(a, b) != r.one() || r.mul(b, a) == r.one())
        });
        let c = class_predicates(&r).unwrap();
        assert_eq!(c.flags.semicommutative, semicommutative, "{}", r.name());
        assert_eq!(
            semicommutative_witness(&r).is_none(),
            semicommutative,
            "{}",
            r.name()
        );
        assert_eq!(c.flags.two_primal, two_primal, "{}", r.name());
        assert_eq!(is_two_primal(&r), two_primal, "{}", r.name());
        assert_eq!(c.flags.reduced, nil.len() == 1, "{}", r.name());
        assert_eq!(c.flags.ni, upper_radical(&r) == nil, "{}", r.name());
        assert_eq!(is_dedekind_finite(&r), dedekind, "{}", r.name());
        // reduced ⇒ semicommutative ⇒ 2-primal ⇒ NI
        assert!(!c.flags.reduced || c.flags.semicommutative);
        assert!(!c.flags.semicommutative || c.flags.two_primal);
        assert!(!c.flags.two_primal || c.flags.ni);
    }
}

#[test]
fn triangular_radical_formulas_hold() {
    for (r, n) in [(z(2), 2), (z(4), 2), (z(2), 3)] {
        assert!(
            radical_formula_check_tn(&r, n).unwrap().equal(),
            "T{n}({})",
            r.name()
        );
        // independent restatement: diagonal in N_*(R), the rest free
        let t = upper_triangular(&r, n).unwrap();
        let lo_r = lower_radical(&r);
        let expected: Set = t
            .ring
            .elements()
            .filter(|&x| (0..n).all(|i| lo_r.contains(&t.entry(x, i, i))))
            .collect();
        assert_eq!(lower_radical(&t.ring), expected);
    }
    for r in [z(2), z(3)] {
        assert!(
            radical_formula_check_h3(&r).unwrap().equal(),
            "H3({})",
            r.name()
        );
    }
    let s = z2xz2();
    assert!(radical_formula_check_skew(&s, 2, &swap(&s))
        .unwrap()
        .equal());
    assert!(
        radical_formula_check_skew(&z(4), 2, &Endomorphism::identity(&z(4)))
            .unwrap()
            .equal()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `N_*(R/I) ⊇ image of N_*(R)`, and the quotient is a ring.
    #[test]
    fn quotients_preserve_the_radical_image(ri in 0usize..10, pick in any::<u16>()) {
        let r = &small_rings()[ri];
        let ideals = enumerate_ideals(r).unwrap();
        let i = &ideals[pick as usize % ideals.len()];
        prop_assume!(i.is_proper());
        let quo = quotient(r, i.members()).unwrap();
        let (q, map) = (&quo.ring, &quo.projection);
        prop_assert!(axioms_hold(q, all_triples(q.order())));
        let lo_q = lower_radical(q);
        for a in lower_radical(r) {
            prop_assert!(lo_q.contains(&map.apply(a)));
        }
    }

    /// Nilpotency is invariant under every element's powers.
    #[test]
    fn nilpotent_powers_stay_nilpotent(ri in 0usize..10, a in any::<u16>(), k in 1usize..6) {
        let r = &small_rings()[ri];
        let a = a as usize % r.order();
        let nil = nilpotents(r);
        if nil.contains(&a) {
            prop_assert!(nil.contains(&r.pow(a, k)));
        }
    }
}
