//! Nilpotent sets, nilradicals, and the ring-class predicates built on them.
//!
//! The lower nilradical has two independent routes: the intersection of all
//! prime ideals (needs the ideal lattice, so small rings only) and the
//! strongly-nilpotent characterization via m-sequences, decided on the finite
//! graph `a → b` for nonzero `b ∈ aRa`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::ring::FiniteRing;
use crate::set::ElemSet;

/// Largest order for which the upper nilradical is computed.
pub const UPPER_NILRADICAL_CAP: usize = 256;

/// Largest order for weak-annihilator families.
pub const ANNIHILATOR_FAMILY_CAP: usize = 256;

/// Least `k ≥ 1` with `a^k = 0`, if any.
pub fn nilpotency_index(r: &FiniteRing, a: usize) -> Option<usize> {
    let mut x = a;
    for k in 1..=r.order() {
        if x == r.zero() {
            return Some(k);
        }
        x = r.mul(x, a);
    }
    None
}

/// `N(R)`.
pub fn nilpotents(r: &FiniteRing) -> ElemSet {
    ElemSet::from_iter(
        r.order(),
        r.elements().filter(|&a| nilpotency_index(r, a).is_some()),
    )
}

/// `N_*(R)` as the intersection of the prime ideals.
pub fn lower_nilradical_primes(r: &FiniteRing) -> Result<ElemSet> {
    let mut acc = ElemSet::full(r.order());
    for ideal in enumerate_ideals(r)? {
        if ideal.is_prime(r) {
            acc = acc.intersection(ideal.members());
        }
    }
    Ok(acc)
}

/// Strongly nilpotent elements of `domain`, where m-sequences take their
/// middle factors from `middle` (`a_{n+1} ∈ a_n · middle · a_n`).
///
/// An element is strongly nilpotent iff no cycle of nonzero elements is
/// reachable from it; nodes are peeled off in reverse topological order until
/// only those reaching a cycle remain.
fn strongly_nilpotent(r: &FiniteRing, domain: &ElemSet, middle: &ElemSet) -> ElemSet {
    let n = r.order();
    let zero = r.zero();
    let mids = middle.to_vec();
    let nodes: Vec<usize> = domain.iter().filter(|&a| a != zero).collect();
    let mut succ: Vec<Vec<u16>> = vec![Vec::new(); n];
    let mut pred: Vec<Vec<u16>> = vec![Vec::new(); n];
    let mut stamp = vec![usize::MAX; n];
    for &a in &nodes {
        for &x in &mids {
            let b = r.mul(r.mul(a, x), a);
            if b != zero && stamp[b] != a {
                stamp[b] = a;
                succ[a].push(b as u16);
                pred[b].push(a as u16);
            }
        }
    }
    let mut outdeg: Vec<usize> = (0..n).map(|a| succ[a].len()).collect();
    let mut sn = ElemSet::from_iter(n, [zero]);
    let mut stack: Vec<usize> = nodes.iter().copied().filter(|&a| outdeg[a] == 0).collect();
    while let Some(a) = stack.pop() {
        if !sn.insert(a) {
            continue;
        }
        for &p in &pred[a] {
            let p = p as usize;
            outdeg[p] -= 1;
            if outdeg[p] == 0 {
                stack.push(p);
            }
        }
    }
    sn.intersection(&domain.union(&ElemSet::from_iter(n, [zero])))
}

/// `N_*(R)` via m-sequences. Works for every order up to the ring size cap.
pub fn lower_nilradical_msequence(r: &FiniteRing) -> ElemSet {
    let all = ElemSet::full(r.order());
    strongly_nilpotent(r, &all, &all)
}

/// `N^*(R)`, the largest nil ideal: the union of all nil principal ideals
/// (a sum of nil ideals is nil, so this is their sum).
pub fn upper_nilradical(r: &FiniteRing) -> Result<ElemSet> {
    if r.order() > UPPER_NILRADICAL_CAP {
        return Err(Error::IdealCap {
            order: r.order(),
            cap: UPPER_NILRADICAL_CAP,
        });
    }
    let nil = nilpotents(r);
    let mut upper = ElemSet::from_iter(r.order(), [r.zero()]);
    for a in nil.iter() {
        if upper.contains(a) {
            continue;
        }
        let principal = Ideal::generated(r, [a]);
        if principal.members().is_subset(&nil) {
            upper = upper.union(principal.members());
        }
    }
    debug_assert!(upper.is_subset(&nil));
    debug_assert!(Ideal::new(r, upper.clone()).is_ok());
    Ok(upper)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalProfile {
    pub nilpotents: ElemSet,
    pub lower: ElemSet,
    pub upper: ElemSet,
    /// `Some(k)` for nilpotent elements.
    pub nilpotency_index: Vec<Option<usize>>,
}

impl RadicalProfile {
    pub fn compute(r: &FiniteRing) -> Result<RadicalProfile> {
        let nilpotency_index: Vec<Option<usize>> =
            r.elements().map(|a| nilpotency_index(r, a)).collect();
        let nilpotents = ElemSet::from_iter(
            r.order(),
            r.elements().filter(|&a| nilpotency_index[a].is_some()),
        );
        Ok(RadicalProfile {
            lower: lower_nilradical_msequence(r),
            upper: upper_nilradical(r)?,
            nilpotents,
            nilpotency_index,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub reduced: bool,
    pub semicommutative: bool,
    pub two_primal: bool,
    pub ni: bool,
    pub dedekind_finite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub flags: ClassFlags,
    /// `(a, c, b)` with `ab = 0` and `acb ≠ 0`.
    pub semicommutative_witness: Option<(usize, usize, usize)>,
}

/// First `(a, c, b)` in index order with `ab = 0`, `c ∈ middle` and `acb ≠ 0`,
/// with `a`, `b` ranging over `domain`.
fn semicommutative_failure(
    r: &FiniteRing,
    domain: &ElemSet,
    middle: &ElemSet,
) -> Option<(usize, usize, usize)> {
    for a in domain.iter() {
        for b in domain.iter() {
            if r.mul(a, b) != r.zero() {
                continue;
            }
            if let Some(c) = middle.iter().find(|&c| r.mul(r.mul(a, c), b) != r.zero()) {
                return Some((a, c, b));
            }
        }
    }
    None
}

pub fn semicommutative_witness(r: &FiniteRing) -> Option<(usize, usize, usize)> {
    let all = ElemSet::full(r.order());
    semicommutative_failure(r, &all, &all)
}

pub fn is_two_primal(r: &FiniteRing) -> bool {
    lower_nilradical_msequence(r) == nilpotents(r)
}

pub fn is_dedekind_finite(r: &FiniteRing) -> bool {
    r.elements().all(|a| {
        r.elements()
            .all(|b| r.mul(a, b) != r.one() || r.mul(b, a) == r.one())
    })
}

pub fn class_predicates(r: &FiniteRing) -> Result<ClassReport> {
    let profile = RadicalProfile::compute(r)?;
    Ok(class_predicates_from(r, &profile))
}

pub fn class_predicates_from(r: &FiniteRing, p: &RadicalProfile) -> ClassReport {
    let witness = semicommutative_witness(r);
    ClassReport {
        flags: ClassFlags {
            reduced: p.nilpotents.len() == 1,
            semicommutative: witness.is_none(),
            two_primal: p.lower == p.nilpotents,
            ni: p.upper == p.nilpotents,
            dedekind_finite: is_dedekind_finite(r),
        },
        semicommutative_witness: witness,
    }
}

/// `I` is semicommutative as a ring without identity: `ab = 0` in `I`
/// forces `aIb = 0`. Returns the failing `(a, c, b)` with `c ∈ I`.
pub fn is_semicommutative_ideal(
    r: &FiniteRing,
    ideal: &Ideal,
) -> core::result::Result<(), (usize, usize, usize)> {
    match semicommutative_failure(r, ideal.members(), ideal.members()) {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// `N(I)` and the m-sequence radical of `I` computed with products inside `I`.
pub fn rng_radicals(r: &FiniteRing, ideal: &Ideal) -> (ElemSet, ElemSet) {
    let nil = nilpotents(r).intersection(ideal.members());
    let lower = strongly_nilpotent(r, ideal.members(), ideal.members());
    (nil, lower)
}

/// `I` viewed as a ring without identity is 2-primal: `N(I) = N_*(I)`.
pub fn is_two_primal_rng(r: &FiniteRing, ideal: &Ideal) -> bool {
    let (nil, lower) = rng_radicals(r, ideal);
    nil == lower
}

/// `N_R(X) = {a : xa ∈ N(R) for all x ∈ X}`.
pub fn weak_annihilator(r: &FiniteRing, xs: &ElemSet) -> ElemSet {
    let nil = nilpotents(r);
    weak_annihilator_with(r, xs, &nil)
}

fn weak_annihilator_with(r: &FiniteRing, xs: &ElemSet, nil: &ElemSet) -> ElemSet {
    ElemSet::from_iter(
        r.order(),
        r.elements()
            .filter(|&a| xs.iter().all(|x| nil.contains(r.mul(x, a)))),
    )
}

/// `{N_R(U) : U ⊆ R}`: every `N_R(U)` is the intersection of the singleton
/// annihilators of its members, so the family is the intersection closure of
/// the singletons together with `N_R(∅) = R`.
pub fn weak_annihilator_family(r: &FiniteRing) -> Result<BTreeSet<ElemSet>> {
    if r.order() > ANNIHILATOR_FAMILY_CAP {
        return Err(Error::SizeCap {
            what: "weak annihilator family".into(),
            requested: r.order() as u128,
            cap: ANNIHILATOR_FAMILY_CAP as u128,
        });
    }
    let nil = nilpotents(r);
    let mut family = BTreeSet::new();
    family.insert(ElemSet::full(r.order()));
    for x in r.elements() {
        let single = weak_annihilator_with(r, &ElemSet::from_iter(r.order(), [x]), &nil);
        let meets: Vec<ElemSet> = family.iter().map(|f| f.intersection(&single)).collect();
        family.extend(meets);
    }
    Ok(family)
}

/// Least nilpotent `s` with `N_R(q) = sR`, if one exists.
pub fn nilpotent_pp_generator(r: &FiniteRing, q: usize) -> Option<usize> {
    let nil = nilpotents(r);
    let target = weak_annihilator_with(r, &ElemSet::from_iter(r.order(), [q]), &nil);
    let found = nil
        .iter()
        .find(|&s| ElemSet::from_iter(r.order(), r.elements().map(|x| r.mul(s, x))) == target);
    found
}

/// Nilpotent p.p.: for every `q ∉ N(R)` some nilpotent `s` has `N_R(q) = sR`.
/// `Ok` carries the certificate `(q, s)`; `Err` carries the first failing `q`.
pub fn is_nilpotent_pp(r: &FiniteRing) -> core::result::Result<Vec<(usize, usize)>, usize> {
    let nil = nilpotents(r);
    let mut cert = Vec::new();
    for q in r.elements().filter(|&q| !nil.contains(q)) {
        match nilpotent_pp_generator(r, q) {
            Some(s) => cert.push((q, s)),
            None => return Err(q),
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn z12_radicals() {
        let z12 = make_zmod(12).unwrap();
        let six = ElemSet::from_iter(12, [0, 6]);
        assert_eq!(nilpotents(&z12), six);
        assert_eq!(lower_nilradical_primes(&z12).unwrap(), six);
        assert_eq!(lower_nilradical_msequence(&z12), six);
        assert_eq!(upper_nilradical(&z12).unwrap(), six);
        let c = class_predicates(&z12).unwrap().flags;
        assert_eq!(
            c,
            ClassFlags {
                reduced: false,
                semicommutative: true,
                two_primal: true,
                ni: true,
                dedekind_finite: true
            }
        );
    }

    #[test]
    fn fields_and_trivial_ring() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(nilpotents(&z2).to_vec(), [0]);
        assert_eq!(lower_nilradical_primes(&z2).unwrap().to_vec(), [0]);
        let c = class_predicates(&z2).unwrap().flags;
        assert!(c.reduced && c.semicommutative && c.two_primal && c.ni && c.dedekind_finite);
        let z1 = make_zmod(1).unwrap();
        assert_eq!(lower_nilradical_msequence(&z1).to_vec(), [0]);
        // no proper ideals, so the empty intersection is the whole carrier
        assert_eq!(lower_nilradical_primes(&z1).unwrap().to_vec(), [0]);
    }

    #[test]
    fn weak_annihilators() {
        let z12 = make_zmod(12).unwrap();
        let w = weak_annihilator(&z12, &ElemSet::from_iter(12, [4]));
        assert_eq!(w.to_vec(), [0, 3, 6, 9]);
        assert_eq!(
            weak_annihilator(&z12, &ElemSet::empty(12)),
            ElemSet::full(12)
        );
        assert_eq!(
            weak_annihilator(&z12, &ElemSet::from_iter(12, [0])),
            ElemSet::full(12)
        );
        let fam = weak_annihilator_family(&z12).unwrap();
        assert!(fam.contains(&ElemSet::from_iter(12, [0, 3, 6, 9])));

        let z2 = make_zmod(2).unwrap();
        let fam2 = weak_annihilator_family(&z2).unwrap();
        assert_eq!(fam2.len(), 2);
        assert!(fam2.contains(&ElemSet::from_iter(2, [0])));
        let z1 = make_zmod(1).unwrap();
        assert_eq!(weak_annihilator_family(&z1).unwrap().len(), 1);
    }

    #[test]
    fn nilpotent_pp() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(is_nilpotent_pp(&z2), Ok(vec![(1, 0)]));
        let z12 = make_zmod(12).unwrap();
        assert_eq!(nilpotent_pp_generator(&z12, 4), None);
        assert_eq!(is_nilpotent_pp(&z12), Err(2));
        assert_eq!(is_nilpotent_pp(&make_zmod(1).unwrap()), Ok(vec![]));
    }

    #[test]
    fn ideal_rng_checks() {
        let z12 = make_zmod(12).unwrap();
        let i = Ideal::new(&z12, ElemSet::from_iter(12, [0, 6])).unwrap();
        assert!(is_two_primal_rng(&z12, &i));
        assert!(is_semicommutative_ideal(&z12, &i).is_ok());
        assert!(is_two_primal_rng(&z12, &Ideal::zero(&z12)));
        assert!(is_semicommutative_ideal(&z12, &Ideal::zero(&z12)).is_ok());
    }
}
