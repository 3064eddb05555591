mod common;

use common::*;
use proptest::prelude::*;
use ringlab_core::construct::{
    a_ring, b_ring, full_matrix, h3, s_ring, skew_poly_quotient_iso, skew_polynomial_quotient,
    skew_upper_triangular, t_ring, upper_triangular, MatrixRing,
};
use ringlab_core::ring::{check_ring_axioms, direct_product, Endomorphism};
use ringlab_core::FiniteRing;

#[test]
fn small_rings_satisfy_axioms_on_every_triple() {
    for r in small_rings() {
        assert!(axioms_hold(&r, all_triples(r.order())), "{}", r.name());
        assert!(check_ring_axioms(&r).is_empty(), "{}", r.name());
    }
}

#[test]
fn orders_of_matrix_constructions() {
    let id = Endomorphism::identity(&z(2));
    let cases: Vec<(MatrixRing, usize)> = vec![
        (upper_triangular(&z(2), 3).unwrap(), 64),
        (full_matrix(&z(2), 2).unwrap(), 16),
        (h3(&z(2)).unwrap(), 32),
        (s_ring(&z(2), 3, &id).unwrap(), 16),
        (t_ring(&z(2), 3, &id).unwrap(), 8),
        (a_ring(&z(2), 4, &id).unwrap(), 32),
        (b_ring(&z(2), 4, &id).unwrap(), 64),
    ];
    for (m, order) in cases {
        assert_eq!(m.ring.order(), order, "{}", m.ring.name());
    }
}

#[test]
fn small_matrix_tables_match_entrywise_arithmetic() {
    let s = z2xz2();
    let sw = swap(&s);
    let cases: Vec<(MatrixRing, Option<Endomorphism>)> = vec![
        (upper_triangular(&z(4), 2).unwrap(), None),
        (full_matrix(&z(2), 2).unwrap(), None),
        (h3(&z(2)).unwrap(), None),
        (skew_upper_triangular(&s, 2, &sw).unwrap(), Some(sw.clone())),
        (t_ring(&s, 3, &sw).unwrap(), Some(sw.clone())),
        (
            s_ring(&z(2), 3, &Endomorphism::identity(&z(2))).unwrap(),
            Some(Endomorphism::identity(&z(2))),
        ),
    ];
    for (m, e) in &cases {
        let n = m.ring.order();
        assert!(
            matrix_tables_agree(
                m,
                e.as_ref(),
                (0..n).flat_map(|x| (0..n).map(move |y| (x, y)))
            ),
            "{}",
            m.ring.name()
        );
        assert!(
            axioms_hold(&m.ring, all_triples(n.min(16))),
            "{}",
            m.ring.name()
        );
    }
}

/// Builds that are too large for exhaustive pair checks.
fn large_builds() -> Vec<(MatrixRing, Option<Endomorphism>)> {
    let s = z2xz2();
    let sw = swap(&s);
    let id4 = Endomorphism::identity(&z(4));
    vec![
        (b_ring(&s, 4, &sw).unwrap(), Some(sw.clone())),
        (a_ring(&z(4), 4, &id4).unwrap(), Some(id4.clone())),
        (upper_triangular(&z(2), 4).unwrap(), None),
        (full_matrix(&z(3), 2).unwrap(), None),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn large_matrix_tables_match_entrywise_arithmetic(seed in any::<[u16; 6]>()) {
        for (m, e) in large_builds_cached() {
            let n = m.ring.order();
            let (x, y, w) = (seed[0] as usize % n, seed[1] as usize % n, seed[2] as usize % n);
            prop_assert!(matrix_tables_agree(m, e.as_ref(), [(x, y), (y, x), (w, x)].into_iter()), "{}", m.ring.name());
            prop_assert!(axioms_hold(&m.ring, [(x, y, w)].into_iter()));
        }
    }

    #[test]
    fn direct_products_are_componentwise(i in 0usize..5, j in 0usize..5, seed in any::<[u16; 3]>()) {
        let rings = [z(2), z(3), z(4), z2xz2(), upper_triangular(&z(2), 2).unwrap().ring];
        let (r, s) = (&rings[i], &rings[j]);
        let p = direct_product(&[r, s]).unwrap();
        prop_assert_eq!(p.order(), r.order() * s.order());
        let n = p.order();
        let (x, y, w) = (seed[0] as usize % n, seed[1] as usize % n, seed[2] as usize % n);
        prop_assert!(axioms_hold(&p, [(x, y, w)].into_iter()));
    }
}

fn large_builds_cached() -> &'static Vec<(MatrixRing, Option<Endomorphism>)> {
    static CELL: std::sync::OnceLock<Vec<(MatrixRing, Option<Endomorphism>)>> =
        std::sync::OnceLock::new();
    CELL.get_or_init(large_builds)
}

#[test]
fn identity_endomorphism_gives_plain_tables() {
    for r in [z(2), z(4), z2xz2()] {
        let id = Endomorphism::identity(&r);
        let skew = skew_upper_triangular(&r, 2, &id).unwrap();
        let plain = upper_triangular(&r, 2).unwrap();
        assert!(skew.ring.same_tables(&plain.ring), "{}", r.name());
    }
}

#[test]
fn truncated_skew_polynomials_match_the_t_construction() {
    let s = z2xz2();
    let sets: Vec<(FiniteRing, usize, Endomorphism)> = vec![
        (z(2), 2, Endomorphism::identity(&z(2))),
        (z(4), 3, Endomorphism::identity(&z(4))),
        (s.clone(), 2, swap(&s)),
    ];
    for (r, n, e) in sets {
        let q = skew_polynomial_quotient(&r, n, &e).unwrap();
        let t = t_ring(&r, n, &e).unwrap();
        assert_eq!(q.order(), t.ring.order());
        let phi = skew_poly_quotient_iso(&r, n, &e)
            .unwrap()
            .expect("isomorphism");
        assert!(phi.is_bijective());
        for x in q.elements() {
            for y in q.elements() {
                assert_eq!(
                    phi.apply(q.mul(x, y)),
                    t.ring.mul(phi.apply(x), phi.apply(y))
                );
                assert_eq!(
                    phi.apply(q.add(x, y)),
                    t.ring.add(phi.apply(x), phi.apply(y))
                );
            }
        }
    }
}

#[test]
fn swap_twists_across_the_off_diagonal() {
    let s = z2xz2();
    let sw = swap(&s);
    let m = skew_upper_triangular(&s, 2, &sw).unwrap();
    let (o, zero) = (s.one(), s.zero());
    let e12 = m.from_entries(&[zero, o, zero, zero]).unwrap();
    for a in s.elements() {
        let scalar = m.from_entries(&[a, zero, zero, a]).unwrap();
        let twisted = m
            .from_entries(&[sw.apply(a), zero, zero, sw.apply(a)])
            .unwrap();
        assert_eq!(m.ring.mul(e12, scalar), m.ring.mul(twisted, e12));
    }
}
