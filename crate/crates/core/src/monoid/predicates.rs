//! Monoid-theoretic hypotheses: cancellation, unique products, torsion,
//! submonoids, ideals and compatible orders.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{FragmentBound, Monoid, MonoidElem, MonoidFragment, MonoidKind, FRAGMENT_CAP};
use crate::error::{Error, Result};

/// `a·b = a·c` (left) or `b·a = c·a` (right) with `b ≠ c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancelWitness {
    pub left: bool,
    pub a: MonoidElem,
    pub b: MonoidElem,
    pub c: MonoidElem,
}

impl CancelWitness {
    pub fn holds_in(&self, m: &Monoid) -> bool {
        let (x, y) = if self.left {
            (m.op(&self.a, &self.b), m.op(&self.a, &self.c))
        } else {
            (m.op(&self.b, &self.a), m.op(&self.c, &self.a))
        };
        self.b != self.c && x == y
    }
}

/// Cancellation. Finite kinds are scanned (rows and columns must be
/// permutations); free and abelian kinds are cancellative by construction.
pub fn is_cancellative(m: &Monoid) -> core::result::Result<(), CancelWitness> {
    match m.kind() {
        MonoidKind::FreeCommutative(_) | MonoidKind::Cyclic(_) | MonoidKind::FgAbelian(_) => Ok(()),
        MonoidKind::FreeWord {
            nil_degree: None, ..
        } => Ok(()),
        MonoidKind::FreeWord {
            nil_degree: Some(_),
            ..
        } => {
            // 0·e = 0·0 with e ≠ 0
            Err(CancelWitness {
                left: true,
                a: MonoidElem::Zero,
                b: m.identity(),
                c: MonoidElem::Zero,
            })
        }
        MonoidKind::Table(_) => {
            let elems = m.elements().expect("table monoid is finite");
            for a in &elems {
                for (i, b) in elems.iter().enumerate() {
                    for c in &elems[i + 1..] {
                        if m.op(a, b) == m.op(a, c) {
                            return Err(CancelWitness {
                                left: true,
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                            });
                        }
                        if m.op(b, a) == m.op(c, a) {
                            return Err(CancelWitness {
                                left: false,
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                            });
                        }
                    }
                }
            }
            Ok(())
        }
        MonoidKind::Product(x, y) => {
            let lift = |w: CancelWitness, first: bool| {
                let wrap = |e: MonoidElem| {
                    if first {
                        MonoidElem::Tuple(vec![e, y.identity()])
                    } else {
                        MonoidElem::Tuple(vec![x.identity(), e])
                    }
                };
                CancelWitness {
                    left: w.left,
                    a: wrap(w.a),
                    b: wrap(w.b),
                    c: wrap(w.c),
                }
            };
            is_cancellative(x).map_err(|w| lift(w, true))?;
            is_cancellative(y).map_err(|w| lift(w, false))
        }
        MonoidKind::Coproduct(list) => {
            for (k, f) in list.iter().enumerate() {
                if let Err(w) = is_cancellative(f) {
                    let wrap = |e: MonoidElem| {
                        MonoidElem::Tuple(
                            list.iter()
                                .enumerate()
                                .map(|(i, g)| if i == k { e.clone() } else { g.identity() })
                                .collect(),
                        )
                    };
                    return Err(CancelWitness {
                        left: w.left,
                        a: wrap(w.a),
                        b: wrap(w.b),
                        c: wrap(w.c),
                    });
                }
            }
            Ok(())
        }
    }
}

/// Unique-product status. Never claimed from a failed search alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpStatus {
    /// Free, torsion-free abelian, trivial, or products of such.
    ByConstruction,
    /// Nonempty finite `A`, `B` with no uniquely presented product.
    Refuted {
        a: Vec<MonoidElem>,
        b: Vec<MonoidElem>,
    },
    Unknown,
}

impl UpStatus {
    pub fn is_up(&self) -> bool {
        matches!(self, UpStatus::ByConstruction)
    }
}

/// True when no element of `A·B` has exactly one presentation `ab`.
pub(crate) fn no_unique_product(m: &Monoid, a: &[MonoidElem], b: &[MonoidElem]) -> bool {
    let mut count: BTreeMap<MonoidElem, usize> = BTreeMap::new();
    for x in a {
        for y in b {
            *count.entry(m.op(x, y)).or_default() += 1;
        }
    }
    count.values().all(|&c| c >= 2)
}

/// First pair of subsets `(A, B)` of `elems`, each of size at most
/// `max_subset`, whose products have no unique presentation. Subsets are
/// ordered by size, then by positions in `elems`; `A` is the outer loop.
pub fn up_violation_search(
    m: &Monoid,
    elems: &[MonoidElem],
    max_subset: usize,
) -> Option<(Vec<MonoidElem>, Vec<MonoidElem>)> {
    let subsets = subsets_up_to(elems.len(), max_subset);
    for sa in &subsets {
        let a: Vec<MonoidElem> = sa.iter().map(|&i| elems[i].clone()).collect();
        for sb in &subsets {
            let b: Vec<MonoidElem> = sb.iter().map(|&i| elems[i].clone()).collect();
            if no_unique_product(m, &a, &b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=k.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.clone());
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// Non-u.p. witness for a finite monoid, built from the first non-identity
/// element `x`: the powers of `x` end in a cyclic group `K`; when `|K| ≥ 2`
/// the pair `(K, K)` works, otherwise `K = {f}` with `f ≠ e` idempotent and
/// `({f}, {e, f})` works.
fn finite_up_witness(m: &Monoid) -> Option<(Vec<MonoidElem>, Vec<MonoidElem>)> {
    let elems = m.elements().ok()?;
    let e = m.identity();
    let x = elems.iter().find(|&y| *y != e)?;
    let mut seen: BTreeMap<MonoidElem, usize> = BTreeMap::new();
    let mut powers = Vec::new();
    let mut p = x.clone();
    while !seen.contains_key(&p) {
        seen.insert(p.clone(), powers.len());
        powers.push(p.clone());
        p = m.op(&p, x);
    }
    let kernel: Vec<MonoidElem> = powers[seen[&p]..].to_vec();
    let (a, b) = if kernel.len() >= 2 {
        let mut k = kernel.clone();
        k.sort();
        (k.clone(), k)
    } else {
        let f = kernel[0].clone();
        let mut b = vec![e, f.clone()];
        b.sort();
        (vec![f], b)
    };
    debug_assert!(no_unique_product(m, &a, &b));
    Some((a, b))
}

impl Monoid {
    pub fn up_status(&self) -> UpStatus {
        match self.kind() {
            MonoidKind::FreeCommutative(_)
            | MonoidKind::FreeWord {
                nil_degree: None, ..
            } => UpStatus::ByConstruction,
            MonoidKind::FgAbelian(f) if torsion_check_fg_abelian(f) => UpStatus::ByConstruction,
            MonoidKind::FgAbelian(f) => {
                let k = f.iter().position(|&d| d >= 2).unwrap();
                let group: Vec<MonoidElem> = (0..f[k] as i64)
                    .map(|r| {
                        let mut v = vec![0; f.len()];
                        v[k] = r;
                        MonoidElem::Vector(v)
                    })
                    .collect();
                UpStatus::Refuted {
                    a: group.clone(),
                    b: group,
                }
            }
            MonoidKind::Product(_, _) | MonoidKind::Coproduct(_) => {
                let factors: Vec<&Monoid> = match self.kind() {
                    MonoidKind::Product(x, y) => vec![x, y],
                    MonoidKind::Coproduct(list) => list.iter().collect(),
                    _ => unreachable!(),
                };
                let statuses: Vec<UpStatus> = factors.iter().map(|f| f.up_status()).collect();
                if statuses.iter().all(UpStatus::is_up) {
                    return UpStatus::ByConstruction;
                }
                for (k, s) in statuses.into_iter().enumerate() {
                    if let UpStatus::Refuted { a, b } = s {
                        let wrap = |e: MonoidElem| {
                            MonoidElem::Tuple(
                                factors
                                    .iter()
                                    .enumerate()
                                    .map(|(i, g)| if i == k { e.clone() } else { g.identity() })
                                    .collect(),
                            )
                        };
                        return UpStatus::Refuted {
                            a: a.into_iter().map(wrap).collect(),
                            b: b.into_iter().map(wrap).collect(),
                        };
                    }
                }
                UpStatus::Unknown
            }
            _ => match finite_up_witness(self) {
                None => UpStatus::ByConstruction,
                Some((a, b)) => UpStatus::Refuted { a, b },
            },
        }
    }
}

/// Torsion-free iff every invariant factor is `0` (free) or `1` (trivial).
pub fn torsion_check_fg_abelian(invariant_factors: &[u64]) -> bool {
    invariant_factors.iter().all(|&d| d <= 1)
}

/// A non-identity `g` and the least `n ≥ 1` with `gⁿ = e`. Groups answer
/// structurally; other kinds search the fragment of degree `bound`.
pub fn finite_order_element(m: &Monoid, bound: usize) -> Option<(MonoidElem, usize)> {
    match m.kind() {
        MonoidKind::Cyclic(n) => (*n >= 2).then_some((MonoidElem::Index(1), *n)),
        MonoidKind::FgAbelian(f) => f.iter().position(|&d| d >= 2).map(|k| {
            let mut v = vec![0; f.len()];
            v[k] = 1;
            (MonoidElem::Vector(v), f[k] as usize)
        }),
        MonoidKind::FreeCommutative(_) | MonoidKind::FreeWord { .. } => None,
        _ => {
            let frag = m.fragment(bound).ok()?;
            let e = m.identity();
            let limit = frag.len() + 1;
            for g in frag.elements().iter().filter(|&g| *g != e) {
                let mut p = g.clone();
                for k in 1..=limit {
                    if p == e {
                        return Some((g.clone(), k));
                    }
                    p = m.op(&p, g);
                }
            }
            None
        }
    }
}

/// Closure of `gens ∪ {e}` under products, keeping elements of degree at most
/// `bound` (finite monoids ignore the bound).
pub fn submonoid_fragment(m: &Monoid, gens: &[MonoidElem], bound: usize) -> Result<MonoidFragment> {
    for g in gens {
        if !m.contains(g) {
            return Err(Error::Monoid(format!(
                "{g:?} is not an element of {}",
                m.name()
            )));
        }
    }
    let finite = m.is_finite();
    let keep = |x: &MonoidElem| finite || m.degree(x) <= bound;
    let mut set: BTreeSet<MonoidElem> = BTreeSet::new();
    set.insert(m.identity());
    let mut frontier: Vec<MonoidElem> = gens.iter().filter(|g| keep(g)).cloned().collect();
    while let Some(x) = frontier.pop() {
        if !set.insert(x.clone()) {
            continue;
        }
        if set.len() > FRAGMENT_CAP {
            return Err(Error::SizeCap {
                what: "submonoid closure".into(),
                requested: set.len() as u128,
                cap: FRAGMENT_CAP as u128,
            });
        }
        let current: Vec<MonoidElem> = set.iter().cloned().collect();
        for y in &current {
            for p in [m.op(&x, y), m.op(y, &x)] {
                if keep(&p) && !set.contains(&p) {
                    frontier.push(p);
                }
            }
        }
    }
    let mut elems: Vec<MonoidElem> = set.into_iter().collect();
    elems.sort_by(|a, b| (m.degree(a), a).cmp(&(m.degree(b), b)));
    let fb = if finite {
        FragmentBound::Whole
    } else {
        FragmentBound::Degree(bound)
    };
    MonoidFragment::new(m, fb, elems)
}

/// Two-sided absorption of `subset` by the fragment, ignoring products whose
/// degree exceeds the fragment bound.
pub fn monoid_ideal_check(m: &Monoid, subset: &[MonoidElem], ambient: &MonoidFragment) -> bool {
    let members: BTreeSet<&MonoidElem> = subset.iter().collect();
    let in_scope = |x: &MonoidElem| match ambient.bound() {
        FragmentBound::Whole => true,
        FragmentBound::Degree(d) => m.degree(x) <= d,
    };
    subset.iter().all(|x| {
        ambient.elements().iter().all(|s| {
            [m.op(s, x), m.op(x, s)]
                .iter()
                .all(|p| !in_scope(p) || members.contains(p))
        })
    })
}

/// Lexicographic order on `ℕ^k` with the first coordinate dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMonoidWitness {
    rank: usize,
}

pub fn lex_order(m: &Monoid) -> Result<OrderedMonoidWitness> {
    match m.kind() {
        MonoidKind::FreeCommutative(k) => Ok(OrderedMonoidWitness { rank: *k }),
        _ => Err(Error::Monoid(format!(
            "lex order is defined on free commutative monoids, not {}",
            m.name()
        ))),
    }
}

impl OrderedMonoidWitness {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn compare(&self, a: &MonoidElem, b: &MonoidElem) -> Ordering {
        a.cmp(b)
    }

    /// First `(r1, r2, s)` with `r1 < r2` but `r1·s ≮ r2·s` or `s·r1 ≮ s·r2`.
    pub fn compatibility_violation(
        &self,
        m: &Monoid,
        frag: &MonoidFragment,
    ) -> Option<(MonoidElem, MonoidElem, MonoidElem)> {
        let el = frag.elements();
        for r1 in el {
            for r2 in el {
                if self.compare(r1, r2) != Ordering::Less {
                    continue;
                }
                for s in el {
                    if self.compare(&m.op(r1, s), &m.op(r2, s)) != Ordering::Less
                        || self.compare(&m.op(s, r1), &m.op(s, r2)) != Ordering::Less
                    {
                        return Some((r1.clone(), r2.clone(), s.clone()));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    #[test]
    fn cancellation() {
        let mu = make_matrix_unit_monoid();
        let w = is_cancellative(&mu).unwrap_err();
        assert!(w.holds_in(&mu));
        let e22 = mu.parse_elem("E22").unwrap();
        let e11 = mu.parse_elem("E11").unwrap();
        let e12 = mu.parse_elem("E12").unwrap();
        assert!(CancelWitness {
            left: true,
            a: e22,
            b: e11,
            c: e12
        }
        .holds_in(&mu));
        assert!(is_cancellative(&cyclic_group(3).unwrap()).is_ok());
        let w = is_cancellative(&make_lz2()).unwrap_err();
        assert!(w.holds_in(&make_lz2()));
        let p = product_monoid(&free_commutative(1).unwrap(), &make_lz2());
        assert!(is_cancellative(&p).unwrap_err().holds_in(&p));
    }

    #[test]
    fn unique_products() {
        let mu = make_matrix_unit_monoid();
        let (a, b) = up_violation_search(&mu, &mu.elements().unwrap(), 2).unwrap();
        assert!(no_unique_product(&mu, &a, &b));
        let e22 = mu.parse_elem("E22").unwrap();
        let e11 = mu.parse_elem("E11").unwrap();
        let e12 = mu.parse_elem("E12").unwrap();
        assert!(no_unique_product(&mu, &[e22], &[e11, e12]));

        let c2 = cyclic_group(2).unwrap();
        let (a, b) = up_violation_search(&c2, &c2.elements().unwrap(), 2).unwrap();
        assert_eq!(a, c2.elements().unwrap());
        assert_eq!(b, c2.elements().unwrap());

        assert_eq!(
            free_commutative(1).unwrap().up_status(),
            UpStatus::ByConstruction
        );
        assert_eq!(trivial_monoid().up_status(), UpStatus::ByConstruction);
        for m in [
            mu,
            c2,
            cyclic_group(3).unwrap(),
            make_lz2(),
            free_word(2, Some(2)).unwrap(),
            fg_abelian(vec![0, 3]).unwrap(),
        ] {
            match m.up_status() {
                UpStatus::Refuted { a, b } => {
                    assert!(no_unique_product(&m, &a, &b), "{}", m.name())
                }
                s => panic!("{} {s:?}", m.name()),
            }
        }
        let p = product_monoid(&free_commutative(1).unwrap(), &cyclic_group(2).unwrap());
        assert!(matches!(p.up_status(), UpStatus::Refuted { .. }));
        let q = product_monoid(&free_commutative(1).unwrap(), &free_word(2, None).unwrap());
        assert!(q.up_status().is_up());
    }

    #[test]
    fn torsion() {
        assert!(torsion_check_fg_abelian(&[0, 0]));
        assert!(!torsion_check_fg_abelian(&[2]));
        assert!(!torsion_check_fg_abelian(&[0, 3]));
        assert_eq!(
            finite_order_element(&cyclic_group(4).unwrap(), 0),
            Some((MonoidElem::Index(1), 4))
        );
        assert_eq!(finite_order_element(&free_commutative(2).unwrap(), 3), None);
        assert_eq!(finite_order_element(&make_matrix_unit_monoid(), 0), None);
        let p = product_monoid(&free_commutative(1).unwrap(), &cyclic_group(2).unwrap());
        let (g, n) = finite_order_element(&p, 1).unwrap();
        assert_eq!(n, 2);
        assert_eq!(p.pow(&g, 2), p.identity());
    }

    #[test]
    fn submonoids_and_ideals() {
        let nat2 = free_commutative(2).unwrap();
        let f = submonoid_fragment(&nat2, &[MonoidElem::Vector(vec![1, 0])], 3).unwrap();
        let got: Vec<MonoidElem> = f.elements().to_vec();
        let want: Vec<MonoidElem> = (0..4).map(|i| MonoidElem::Vector(vec![i, 0])).collect();
        assert_eq!(got, want);

        let nat = free_commutative(1).unwrap();
        let frag = nat.fragment(3).unwrap();
        let positive: Vec<MonoidElem> = frag.elements()[1..].to_vec();
        assert!(monoid_ideal_check(&nat, &positive, &frag));
        assert!(!monoid_ideal_check(
            &nat,
            &[MonoidElem::Vector(vec![2])],
            &frag
        ));
    }

    #[test]
    fn lex() {
        let nat2 = free_commutative(2).unwrap();
        let o = lex_order(&nat2).unwrap();
        let a = MonoidElem::Vector(vec![0, 1]);
        let b = MonoidElem::Vector(vec![1, 0]);
        assert_eq!(o.compare(&a, &b), Ordering::Less);
        assert!(o
            .compatibility_violation(&nat2, &nat2.fragment(3).unwrap())
            .is_none());
        assert!(lex_order(&cyclic_group(2).unwrap()).is_err());
    }
}
