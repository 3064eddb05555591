//! Test-side oracles. Everything here reads only the raw `add`/`mul` tables
//! of a ring and recomputes derived objects by brute force, so it shares no
//! algorithm with the library under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ringlab_core::construct::MatrixRing;
use ringlab_core::ring::{direct_product, make_zmod, swap_endomorphism, Endomorphism};
use ringlab_core::FiniteRing;

pub type Set = BTreeSet<usize>;

pub fn z(n: usize) -> FiniteRing {
    make_zmod(n).unwrap()
}

pub fn z2xz2() -> FiniteRing {
    direct_product(&[&z(2), &z(2)]).unwrap()
}

pub fn swap(r: &FiniteRing) -> Endomorphism {
    swap_endomorphism(r, 2).unwrap()
}

/// Small rings covering commutative, non-commutative, reduced and
/// non-reduced cases.
pub fn small_rings() -> Vec<FiniteRing> {
    use ringlab_core::construct::{full_matrix, upper_triangular};
    vec![
        z(2),
        z(3),
        z(4),
        z(6),
        z(8),
        z2xz2(),
        direct_product(&[&z(2), &z(4)]).unwrap(),
        upper_triangular(&z(2), 2).unwrap().ring,
        upper_triangular(&z(4), 2).unwrap().ring,
        full_matrix(&z(2), 2).unwrap().ring,
    ]
}

pub fn nilpotents(r: &FiniteRing) -> Set {
    r.elements()
        .filter(|&a| {
            let mut p = a;
            for _ in 0..=r.order() {
                if p == r.zero() {
                    return true;
                }
                p = r.mul(p, a);
            }
            false
        })
        .collect()
}

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_closure(r: &FiniteRing, gens: &Set) -> Set {
    let mut s: Set = gens.clone();
    s.insert(r.zero());
    loop {
        let mut next = s.clone();
        for &a in &s {
            for &b in &s {
                next.insert(r.add(a, b));
            }
            for x in r.elements() {
                next.insert(r.mul(x, a));
                next.insert(r.mul(a, x));
            }
        }
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// Every two-sided ideal, found by growing ideals one generator at a time.
pub fn all_ideals(r: &FiniteRing) -> Vec<Set> {
    let zero: Set = [r.zero()].into_iter().collect();
    let mut seen: BTreeSet<Set> = BTreeSet::new();
    let mut stack = vec![zero];
    while let Some(i) = stack.pop() {
        if !seen.insert(i.clone()) {
            continue;
        }
        for a in r.elements().filter(|a| !i.contains(a)) {
            let mut g = i.clone();
            g.insert(a);
            let j = ideal_closure(r, &g);
            if !seen.contains(&j) {
                stack.push(j);
            }
        }
    }
    seen.into_iter().collect()
}

/// `P` proper and `aRb ⊆ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime(r: &FiniteRing, p: &Set) -> bool {
    if p.len() == r.order() {
        return false;
    }
    for a in r.elements().filter(|a| !p.contains(a)) {
        for b in r.elements().filter(|b| !p.contains(b)) {
            if r.elements().all(|x| p.contains(&r.mul(r.mul(a, x), b))) {
                return false;
            }
        }
    }
    true
}

/// Intersection of all prime ideals.
pub fn lower_radical(r: &FiniteRing) -> Set {
    let mut out: Set = r.elements().collect();
    for p in all_ideals(r).into_iter().filter(|p| is_prime(r, p)) {
        out = out.intersection(&p).copied().collect();
    }
    out
}

/// Largest ideal made of nilpotents.
pub fn upper_radical(r: &FiniteRing) -> Set {
    let n = nilpotents(r);
    all_ideals(r)
        .into_iter()
        .filter(|i| i.is_subset(&n))
        .max_by_key(|i| i.len())
        .unwrap()
}

pub fn to_set(s: &ringlab_core::ElemSet) -> Set {
    s.iter().collect()
}

/// Naive `(AB)_ij = Σ_l a_il · σ^(l-i)(b_lj)` on raw entry lists.
pub fn matrix_product(
    base: &FiniteRing,
    n: usize,
    a: &[usize],
    b: &[usize],
    endo: Option<&Endomorphism>,
) -> Vec<usize> {
    let mut out = vec![base.zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = base.zero();
            for l in 0..n {
                let blj = match endo {
                    Some(e) if l >= i => e.apply_pow(l - i, b[l * n + j]),
                    Some(_) => b[l * n + j],
                    None => b[l * n + j],
                };
                acc = base.add(acc, base.mul(a[i * n + l], blj));
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// Checks the matrix ring's tables against entrywise arithmetic on the
/// listed pairs.
pub fn matrix_tables_agree(
    m: &MatrixRing,
    endo: Option<&Endomorphism>,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> bool {
    let base = &m.base;
    let n = m.n();
    pairs.into_iter().all(|(x, y)| {
        let (a, b) = (m.entries(x), m.entries(y));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(&p, &q)| base.add(p, q)).collect();
        m.entries(m.ring.add(x, y)) == sum
            && m.entries(m.ring.mul(x, y)) == matrix_product(base, n, &a, &b, endo)
    })
}

/// Ring axioms on the listed triples, straight from the tables.
pub fn axioms_hold(r: &FiniteRing, triples: impl Iterator<Item = (usize, usize, usize)>) -> bool {
    let (o, e) = (r.zero(), r.one());
    r.elements().all(|a| {
        r.add(a, o) == a && r.mul(a, e) == a && r.mul(e, a) == a && r.add(a, r.neg(a)) == o
    }) && triples.into_iter().all(|(a, b, c)| {
        r.add(a, b) == r.add(b, a)
            && r.add(r.add(a, b), c) == r.add(a, r.add(b, c))
            && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
            && r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
            && r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
    })
}

pub fn all_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// Coefficient vectors over a monoid given by a multiplication table on
/// positions `0..k`; the product is plain convolution.
pub fn convolve(
    r: &FiniteRing,
    k: usize,
    table: &dyn Fn(usize, usize) -> usize,
    a: &[usize],
    b: &[usize],
) -> Vec<usize> {
    let mut out = vec![r.zero(); k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let t = table(i, j);
            out[t] = r.add(out[t], r.mul(x, y));
        }
    }
    out
}

/// Brute-force Armendariz-type scan: is there `(α, β)` with every
/// coefficient of `αβ` in `target` but some `a_i b_j` outside it?
pub fn violation_exists(
    r: &FiniteRing,
    k: usize,
    out_len: usize,
    table: &dyn Fn(usize, usize) -> usize,
    target: &Set,
) -> bool {
    let q = r.order();
    let space = q.pow(k as u32);
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % q;
            x /= q;
        }
        d
    };
    let all: Vec<Vec<usize>> = (0..space).map(digits).collect();
    for a in &all {
        for b in &all {
            let p = convolve(r, out_len, table, a, b);
            if p.iter().all(|c| target.contains(c))
                && a.iter()
                    .any(|&x| b.iter().any(|&y| !target.contains(&r.mul(x, y))))
            {
                return true;
            }
        }
    }
    false
}
