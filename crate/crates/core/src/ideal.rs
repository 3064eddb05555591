//! Two-sided ideals, quotients and generated subrings.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingMap};
use crate::set::ElemSet;
use crate::IDEAL_ENUMERATION_CAP;

/// A validated two-sided ideal, as a membership set over the ring carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    members: ElemSet,
}

impl Ideal {
    /// Checks closure under addition, negation and two-sided absorption.
    pub fn new(r: &FiniteRing, members: ElemSet) -> Result<Ideal> {
        if let Some(reason) = ideal_violation(r, &members) {
            return Err(Error::NotAnIdeal(reason));
        }
        Ok(Ideal { members })
    }

    /// Smallest ideal containing `gens`.
    pub fn generated(r: &FiniteRing, gens: impl IntoIterator<Item = usize>) -> Ideal {
        Ideal {
            members: ideal_closure(r, gens),
        }
    }

    pub fn zero(r: &FiniteRing) -> Ideal {
        Ideal {
            members: ElemSet::from_iter(r.order(), [r.zero()]),
        }
    }

    pub fn whole(r: &FiniteRing) -> Ideal {
        Ideal {
            members: ElemSet::full(r.order()),
        }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn into_members(self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.members.universe()
    }

    /// `I + J`.
    pub fn sum(&self, r: &FiniteRing, other: &Ideal) -> Ideal {
        let mut set = ElemSet::empty(r.order());
        for a in self.members.iter() {
            for b in other.members.iter() {
                set.insert(r.add(a, b));
            }
        }
        Ideal { members: set }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            members: self.members.intersection(&other.members),
        }
    }

    /// Prime: proper, and `aRb ⊆ P` forces `a ∈ P` or `b ∈ P`.
    pub fn is_prime(&self, r: &FiniteRing) -> bool {
        if !self.is_proper() {
            return false;
        }
        for a in r.elements().filter(|&a| !self.contains(a)) {
            for b in r.elements().filter(|&b| !self.contains(b)) {
                if r.elements().all(|x| self.contains(r.mul(r.mul(a, x), b))) {
                    return false;
                }
            }
        }
        true
    }
}

/// First failed ideal law, described, or `None` for a valid ideal.
fn ideal_violation(r: &FiniteRing, s: &ElemSet) -> Option<String> {
    if s.universe() != r.order() {
        return Some("set universe differs from ring order".into());
    }
    if !s.contains(r.zero()) {
        return Some("missing zero".into());
    }
    for a in s.iter() {
        if !s.contains(r.neg(a)) {
            return Some(format!("not closed under negation at {}", r.label(a)));
        }
        for b in s.iter() {
            if !s.contains(r.add(a, b)) {
                return Some(format!(
                    "not closed under addition at ({}, {})",
                    r.label(a),
                    r.label(b)
                ));
            }
        }
        for x in r.elements() {
            if !s.contains(r.mul(x, a)) || !s.contains(r.mul(a, x)) {
                return Some(format!("does not absorb {} at {}", r.label(x), r.label(a)));
            }
        }
    }
    None
}

fn ideal_closure(r: &FiniteRing, gens: impl IntoIterator<Item = usize>) -> ElemSet {
    let mut set = ElemSet::from_iter(r.order(), [r.zero()]);
    let mut members = vec![r.zero()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for g in gens {
        if set.insert(g) {
            queue.push_back(g);
        }
    }
    while let Some(a) = queue.pop_front() {
        members.push(a);
        let push = |x: usize, set: &mut ElemSet, queue: &mut VecDeque<usize>| {
            if set.insert(x) {
                queue.push_back(x);
            }
        };
        push(r.neg(a), &mut set, &mut queue);
        for x in r.elements() {
            push(r.mul(x, a), &mut set, &mut queue);
            push(r.mul(a, x), &mut set, &mut queue);
        }
        for &b in &members {
            push(r.add(a, b), &mut set, &mut queue);
        }
    }
    set
}

/// All two-sided ideals of `r`, sorted by size then membership.
///
/// Principal ideals are generated first and then closed under pairwise sums;
/// every ideal is the sum of the principal ideals of its members, so the
/// fixpoint is the whole lattice.
pub fn enumerate_ideals(r: &FiniteRing) -> Result<Vec<Ideal>> {
    if r.order() > IDEAL_ENUMERATION_CAP {
        return Err(Error::IdealCap {
            order: r.order(),
            cap: IDEAL_ENUMERATION_CAP,
        });
    }
    let mut found: BTreeSet<Ideal> = BTreeSet::new();
    for a in r.elements() {
        found.insert(Ideal::generated(r, [a]));
    }
    loop {
        let current: Vec<Ideal> = found.iter().cloned().collect();
        let mut grew = false;
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let s = current[i].sum(r, &current[j]);
                if found.insert(s) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// `R/I` together with the projection and a canonical (least) coset representative.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    pub projection: RingMap,
    /// `representative[c]` is the least element of coset `c`.
    pub representative: Vec<usize>,
}

/// Coset ring `R/I`. Cosets are numbered by their least member.
pub fn quotient(r: &FiniteRing, ideal: &ElemSet) -> Result<Quotient> {
    if let Some(reason) = ideal_violation(r, ideal) {
        return Err(Error::NotAnIdeal(reason));
    }
    let mut class = vec![usize::MAX; r.order()];
    let mut reps = Vec::new();
    let members = ideal.to_vec();
    for a in r.elements() {
        if class[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for &i in &members {
            class[r.add(a, i)] = c;
        }
    }
    let labels = reps.iter().map(|&a| format!("[{}]", r.label(a))).collect();
    let ring = FiniteRing::from_fn(
        format!("{}/I", r.name()),
        reps.len(),
        |x, y| class[r.add(reps[x], reps[y])],
        |x, y| class[r.mul(reps[x], reps[y])],
        class[r.zero()],
        class[r.one()],
        labels,
    )?;
    let projection = RingMap {
        source_order: r.order(),
        target_order: ring.order(),
        table: class,
    };
    Ok(Quotient {
        ring,
        projection,
        representative: reps,
    })
}

/// Subring generated by `gens` (plus `1` when `with_one`), re-indexed.
///
/// Without the identity the result is in general a ring without identity; it
/// is then returned with the closure's own identity when one exists, or
/// reported through [`SubringClosure::members`] only.
#[derive(Debug, Clone)]
pub struct SubringClosure {
    pub members: ElemSet,
    /// Present when the closure contains a two-sided identity for itself.
    pub ring: Option<(FiniteRing, Vec<usize>)>,
}

pub fn subring_generated(
    r: &FiniteRing,
    gens: impl IntoIterator<Item = usize>,
    with_one: bool,
) -> SubringClosure {
    let mut set = ElemSet::from_iter(r.order(), [r.zero()]);
    let mut members = vec![r.zero()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    let seed: Vec<usize> = gens.into_iter().chain(with_one.then(|| r.one())).collect();
    for g in seed {
        if set.insert(g) {
            queue.push_back(g);
        }
    }
    while let Some(a) = queue.pop_front() {
        members.push(a);
        if set.insert(r.neg(a)) {
            queue.push_back(r.neg(a));
        }
        for &b in &members {
            for x in [r.add(a, b), r.mul(a, b), r.mul(b, a)] {
                if set.insert(x) {
                    queue.push_back(x);
                }
            }
        }
    }
    let own_one = if with_one {
        Some(r.one())
    } else {
        set.iter()
            .find(|&e| set.iter().all(|x| r.mul(e, x) == x && r.mul(x, e) == x))
    };
    let name = format!("sub({})", r.name());
    let ring = own_one.and_then(|one| r.from_subset(name, &set, one).ok());
    SubringClosure { members: set, ring }
}

/// A block `eR` of a decomposition by a primitive central idempotent `e`.
#[derive(Debug, Clone)]
pub struct Block {
    pub ring: FiniteRing,
    /// `incl[x]` is the element of the ambient ring carried by block element `x`.
    pub incl: Vec<usize>,
    pub idempotent: usize,
}

/// `R ≅ ∏ e_k R` over the primitive central idempotents `e_k`, in ascending
/// order of `e_k`. The zero ring has no blocks.
pub fn central_idempotent_blocks(r: &FiniteRing) -> Result<Vec<Block>> {
    let central: Vec<usize> = r
        .elements()
        .filter(|&e| e != r.zero() && r.mul(e, e) == e && r.is_central(e))
        .collect();
    let primitive: Vec<usize> = central
        .iter()
        .copied()
        .filter(|&e| {
            central
                .iter()
                .all(|&f| f == e || r.mul(f, e) == r.zero() || r.mul(f, e) != f)
        })
        .collect();
    let mut blocks = Vec::new();
    for (k, &e) in primitive.iter().enumerate() {
        let members = ElemSet::from_iter(r.order(), r.elements().map(|x| r.mul(e, x)));
        let (ring, incl) = r.from_subset(format!("{}#{k}", r.name()), &members, e)?;
        blocks.push(Block {
            ring,
            incl,
            idempotent: e,
        });
    }
    debug_assert!(
        r.order() == 1 || blocks.iter().map(|b| b.ring.order()).product::<usize>() == r.order()
    );
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{check_ring_axioms, make_zmod};

    #[test]
    fn z12_ideals_are_the_divisor_lattice() {
        let z12 = make_zmod(12).unwrap();
        let ideals = enumerate_ideals(&z12).unwrap();
        let got: Vec<Vec<usize>> = ideals.iter().map(|i| i.members().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![0],
                vec![0, 6],
                vec![0, 4, 8],
                vec![0, 3, 6, 9],
                vec![0, 2, 4, 6, 8, 10],
                (0..12).collect::<Vec<_>>(),
            ]
        );
    }

    #[test]
    fn field_has_two_ideals() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(enumerate_ideals(&z2).unwrap().len(), 2);
    }

    #[test]
    fn ideal_cap() {
        let big = make_zmod(65).unwrap();
        assert!(matches!(
            enumerate_ideals(&big),
            Err(Error::IdealCap { .. })
        ));
    }

    #[test]
    fn quotients() {
        let z12 = make_zmod(12).unwrap();
        let q = quotient(&z12, &ElemSet::from_iter(12, [0, 6])).unwrap();
        assert_eq!(q.ring.order(), 6);
        assert!(check_ring_axioms(&q.ring).is_empty());
        q.projection.validate(&z12, &q.ring).unwrap();
        let same = quotient(&z12, &ElemSet::from_iter(12, [0])).unwrap();
        assert!(same.ring.same_tables(&z12));
        let trivial = quotient(&z12, &ElemSet::full(12)).unwrap();
        assert_eq!(trivial.ring.order(), 1);
        assert!(matches!(
            quotient(&z12, &ElemSet::from_iter(12, [0, 5])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn subrings() {
        let z12 = make_zmod(12).unwrap();
        let s = subring_generated(&z12, [4], false);
        assert_eq!(s.members.to_vec(), [0, 4, 8]);
        // 4 is idempotent mod 12, so {0,4,8} is a ring with identity 4
        let (ring, incl) = s.ring.unwrap();
        assert_eq!(ring.order(), 3);
        assert_eq!(incl[ring.one()], 4);
        let prime = subring_generated(&z12, [], true);
        assert_eq!(prime.members.len(), 12);
    }

    #[test]
    fn prime_ideals_of_z12() {
        let z12 = make_zmod(12).unwrap();
        let primes: Vec<Vec<usize>> = enumerate_ideals(&z12)
            .unwrap()
            .into_iter()
            .filter(|i| i.is_prime(&z12))
            .map(|i| i.members().to_vec())
            .collect();
        assert_eq!(primes, vec![vec![0, 3, 6, 9], vec![0, 2, 4, 6, 8, 10]]);
    }

    #[test]
    fn blocks_of_z12() {
        let z12 = make_zmod(12).unwrap();
        let blocks = central_idempotent_blocks(&z12).unwrap();
        let orders: Vec<usize> = blocks.iter().map(|b| b.ring.order()).collect();
        // idempotents 4 and 9: 4·ℤ_12 ≅ ℤ_3, 9·ℤ_12 ≅ ℤ_4
        assert_eq!(orders, [3, 4]);
        assert_eq!(
            central_idempotent_blocks(&make_zmod(8).unwrap())
                .unwrap()
                .len(),
            1
        );
        assert!(central_idempotent_blocks(&make_zmod(1).unwrap())
            .unwrap()
            .is_empty());
    }
}
