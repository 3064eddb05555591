mod common;

use common::*;
use proptest::prelude::*;
use ringlab_core::construct::full_matrix;
use ringlab_core::monoid::{cyclic_group, free_commutative, make_lz2, make_matrix_unit_monoid};
use ringlab_core::verdict::{
    check_armendariz, check_armendariz_with, check_m2_counterexample, finite_order_witness,
    CheckConfig, Outcome, Strategy,
};
use ringlab_core::{Error, FiniteRing, Monoid, MonoidElem, MonoidFragment, Variant};

fn oracle_target(r: &FiniteRing, v: Variant) -> Set {
    match v {
        Variant::Armendariz => [r.zero()].into_iter().collect(),
        Variant::Nil => nilpotents(r),
        Variant::LowerNil => lower_radical(r),
        Variant::UpperNil => upper_radical(r),
    }
}

type Table = Box<dyn Fn(usize, usize) -> usize>;

/// Positions, output length and product table of a fragment as the oracle
/// sees it: whole finite monoids, or `{0..d}` inside `nat`.
fn oracle_shape(m: &Monoid, degree: usize) -> (usize, usize, Table) {
    if m.is_finite() {
        let (pos, table) = m.finite_table().unwrap();
        let k = pos.len();
        (k, k, Box::new(move |i, j| table[i * k + j]))
    } else {
        (degree + 1, 2 * degree + 1, Box::new(|i, j| i + j))
    }
}

/// Re-verifies a library witness with test-side arithmetic.
fn witness_is_genuine(
    r: &FiniteRing,
    m: &Monoid,
    f: &MonoidFragment,
    v: Variant,
    w: &ringlab_core::verdict::Witness,
) -> bool {
    let target = oracle_target(r, v);
    let positions: Vec<MonoidElem> = f.elements().to_vec();
    let coeffs = |x: &ringlab_core::MonoidRingElement| -> Vec<usize> {
        positions
            .iter()
            .map(|g| x.coefficient(g).unwrap_or(r.zero()))
            .collect()
    };
    let (a, b) = (coeffs(&w.alpha), coeffs(&w.beta));
    let mut products: std::collections::BTreeMap<MonoidElem, usize> = Default::default();
    for (i, gi) in positions.iter().enumerate() {
        for (j, gj) in positions.iter().enumerate() {
            let e = products.entry(m.op(gi, gj)).or_insert(r.zero());
            *e = r.add(*e, r.mul(a[i], b[j]));
        }
    }
    products.values().all(|c| target.contains(c))
        && r.mul(w.a, w.b) == w.product
        && !target.contains(&w.product)
        && w.alpha.coefficient(&w.g) == Some(w.a)
        && w.beta.coefficient(&w.h) == Some(w.b)
}

#[test]
fn verdicts_match_the_brute_force_oracle() {
    let c2 = cyclic_group(2).unwrap();
    let c3 = cyclic_group(3).unwrap();
    let lz = make_lz2();
    let mu = make_matrix_unit_monoid();
    let nat = free_commutative(1).unwrap();
    let mut cases = 0;
    for r in small_rings().into_iter().filter(|r| r.order() <= 16) {
        let mut monoids: Vec<(&Monoid, usize)> = vec![(&c2, 0), (&lz, 0), (&nat, 1)];
        if r.order() <= 4 {
            monoids.extend([(&c3, 0), (&nat, 2)]);
        }
        if r.order() <= 2 {
            monoids.push((&mu, 0));
        }
        for (m, d) in monoids {
            let f = m.fragment(d).unwrap();
            let (k, out, table) = oracle_shape(m, d);
            for v in Variant::ALL {
                let verdict = check_armendariz(&r, m, &f, v).unwrap();
                let expect = violation_exists(&r, k, out, &*table, &oracle_target(&r, v));
                assert_eq!(
                    verdict.fails(),
                    expect,
                    "{} over {} degree {d}, {}",
                    r.name(),
                    m.name(),
                    v.name()
                );
                if let Some(w) = &verdict.witness {
                    assert!(
                        witness_is_genuine(&r, m, &f, v, w),
                        "{} over {}, {}",
                        r.name(),
                        m.name(),
                        v.name()
                    );
                }
                cases += 1;
            }
        }
    }
    assert!(cases > 100);
}

#[test]
fn strategies_agree() {
    let nat = free_commutative(1).unwrap();
    let f = nat.fragment(2).unwrap();
    for r in small_rings().into_iter().filter(|r| r.order() <= 8) {
        for v in [Variant::Armendariz, Variant::LowerNil] {
            let run = |strategy| {
                check_armendariz_with(
                    &r,
                    &nat,
                    &f,
                    v,
                    &CheckConfig {
                        budget: u128::MAX,
                        strategy,
                    },
                )
            };
            let direct = run(Strategy::Direct).unwrap().outcome;
            assert_eq!(
                run(Strategy::Auto).unwrap().outcome,
                direct,
                "{} {}",
                r.name(),
                v.name()
            );
            if let Ok(reduced) = run(Strategy::Reduced) {
                assert_eq!(reduced.outcome, direct, "{} {}", r.name(), v.name());
            }
        }
    }
}

#[test]
fn exhausted_budget_is_an_error_not_a_verdict() {
    let nat = free_commutative(1).unwrap();
    let f = nat.fragment(3).unwrap();
    let cfg = CheckConfig {
        budget: 10,
        strategy: Strategy::Direct,
    };
    // z2 is reduced, so a holding verdict needs every one of 2^8 pairs
    match check_armendariz_with(&z(2), &nat, &f, Variant::Armendariz, &cfg) {
        Err(Error::Budget { .. }) => {}
        other => panic!("expected a budget error, got {other:?}"),
    }
    let ample = CheckConfig {
        budget: 1 << 8,
        strategy: Strategy::Direct,
    };
    assert!(
        !check_armendariz_with(&z(2), &nat, &f, Variant::Armendariz, &ample)
            .unwrap()
            .fails()
    );
}

#[test]
fn matrix_unit_pair_is_a_zero_product_violation() {
    let m = make_matrix_unit_monoid();
    let (pos, table) = m.finite_table().unwrap();
    let idx = |s: &str| pos.iter().position(|g| m.format_elem(g) == s).unwrap();
    for r in [z(2), z(4)] {
        let (o, neg_one) = (r.one(), r.neg(r.one()));
        let mut a = vec![r.zero(); 6];
        let mut b = vec![r.zero(); 6];
        a[idx("E22")] = o;
        b[idx("E11")] = o;
        b[idx("E12")] = neg_one;
        let prod = convolve(&r, 6, &|i, j| table[i * 6 + j], &a, &b);
        assert!(prod.iter().all(|&c| c == r.zero()), "{}", r.name());
        assert!(!lower_radical(&r).contains(&r.mul(o, o)));
        let f = m.fragment(0).unwrap();
        let v = check_armendariz(&r, &m, &f, Variant::LowerNil).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
    }
}

#[test]
fn m2_certificate_is_exact() {
    for r in [z(2), z(4)] {
        let rep = check_m2_counterexample(&r).unwrap();
        assert!(rep.passes() && rep.verdict.fails(), "{}", r.name());
        let m2 = full_matrix(&r, 2).unwrap();
        let w = rep.verdict.witness.as_ref().unwrap();
        let p = m2.entries(w.product);
        // E12 (E21 + E22) = E11 + E12
        let (o, zero) = (r.one(), r.zero());
        assert_eq!(p, vec![o, o, zero, zero]);
        assert_eq!(m2.ring.mul(w.product, w.product), w.product);
        // N_*(M_2(R)) = M_2(N_*(R)), which misses every nonzero idempotent
        let lo = lower_radical(&r);
        let expected: Set = m2
            .ring
            .elements()
            .filter(|&x| m2.entries(x).iter().all(|e| lo.contains(e)))
            .collect();
        assert_eq!(lower_radical(&m2.ring), expected);
        assert!(!expected.contains(&w.product));
    }
}

#[test]
fn torsion_elements_give_zero_products() {
    for n in 2..=4 {
        let m = cyclic_group(n).unwrap();
        let g = MonoidElem::Index(1);
        for r in small_rings() {
            let (alpha, beta) = finite_order_witness(&r, &m, &g, n).unwrap();
            let coeffs = |x: &ringlab_core::MonoidRingElement| -> Vec<usize> {
                (0..n)
                    .map(|i| x.coefficient(&MonoidElem::Index(i)).unwrap_or(r.zero()))
                    .collect()
            };
            let prod = convolve(&r, n, &|i, j| (i + j) % n, &coeffs(&alpha), &coeffs(&beta));
            assert!(
                prod.iter().all(|&c| c == r.zero()),
                "{} over c{n}",
                r.name()
            );
            // coefficients are ±1 and 1 is never in N_* of a nonzero ring
            assert!(!lower_radical(&r).contains(&r.one()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// A violation on a fragment stays a violation on every larger one.
    #[test]
    fn verdicts_are_monotone_in_the_fragment(ri in 0usize..10, vi in 0usize..4) {
        let r = &small_rings()[ri];
        prop_assume!(r.order() <= 8);
        let nat = free_commutative(1).unwrap();
        let v = Variant::ALL[vi];
        let small = check_armendariz(r, &nat, &nat.fragment(1).unwrap(), v).unwrap();
        let big = check_armendariz(r, &nat, &nat.fragment(2).unwrap(), v).unwrap();
        prop_assert!(!small.fails() || big.fails());
    }
}
