//! Finite rings as operation tables, ring maps, and direct products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{size_check, Error, Result};
use crate::set::ElemSet;
use crate::RING_SIZE_CAP;

/// A finite associative ring with identity on the carrier `0..order`.
///
/// Tables are row-major: `add[a * order + b]` is `a + b`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    label_index: BTreeMap<String, usize>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Builds a ring from raw tables. Only totality is validated here; use
    /// [`check_ring_axioms`] for the algebraic laws.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let order = add.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        size_check("table ring", order as u128, RING_SIZE_CAP as u128)?;
        if mul.len() != order || labels.len() != order {
            return Err(Error::MalformedTable(
                "add, mul and labels must have equal length".into(),
            ));
        }
        let flat = |t: &[Vec<usize>], what: &str| -> Result<Vec<u16>> {
            let mut out = Vec::with_capacity(order * order);
            for (i, row) in t.iter().enumerate() {
                if row.len() != order {
                    return Err(Error::MalformedTable(format!(
                        "{what} row {i} has length {}",
                        row.len()
                    )));
                }
                for &x in row {
                    if x >= order {
                        return Err(Error::MalformedTable(format!(
                            "{what} entry {x} out of range"
                        )));
                    }
                    out.push(x as u16);
                }
            }
            Ok(out)
        };
        let add = flat(&add, "add")?;
        let mul = flat(&mul, "mul")?;
        Self::from_flat(name.into(), order, add, mul, zero, one, labels)
    }

    /// Builds a ring by evaluating `add` and `mul` on every pair.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        size_check("table ring", order as u128, RING_SIZE_CAP as u128)?;
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let s = add(a, b);
                let p = mul(a, b);
                if s >= order || p >= order {
                    return Err(Error::MalformedTable(format!(
                        "entry out of range at ({a},{b})"
                    )));
                }
                at.push(s as u16);
                mt.push(p as u16);
            }
        }
        if labels.len() != order {
            return Err(Error::MalformedTable(
                "label count differs from order".into(),
            ));
        }
        Self::from_flat(name.into(), order, at, mt, zero, one, labels)
    }

    pub(crate) fn from_flat(
        name: String,
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        if zero >= order || one >= order {
            return Err(Error::MalformedTable("zero or one outside carrier".into()));
        }
        let mut neg = vec![u16::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    neg[a] = b as u16;
                    break;
                }
            }
        }
        if let Some(a) = neg.iter().position(|&x| x == u16::MAX) {
            return Err(Error::MalformedTable(format!(
                "element {a} has no additive inverse"
            )));
        }
        let mut label_index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::MalformedTable(format!("duplicate label {l:?}")));
            }
        }
        Ok(FiniteRing {
            name,
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            label_index,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }
    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }
    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }
    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `n·a` for a nonnegative integer `n`.
    pub fn times(&self, n: usize, a: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..n {
            acc = self.add(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order).all(|x| self.mul(a, x) == self.mul(x, a))
    }

    /// Least `k ≥ 1` with `k·a = 0`.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Two-sided multiplicative inverse, if any.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order).find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    /// `{a·r·b : r ∈ R}` as a set.
    pub fn sandwich(&self, a: usize, b: usize) -> ElemSet {
        ElemSet::from_iter(
            self.order,
            (0..self.order).map(|r| self.mul(self.mul(a, r), b)),
        )
    }

    /// Builds the ring carried by `members` (closed under `+`, `·`, negation)
    /// whose identity is `one`, re-indexed in ascending order of `members`.
    /// Returns the ring and the inclusion table (new index -> old index).
    pub fn from_subset(
        &self,
        name: impl Into<String>,
        members: &ElemSet,
        one: usize,
    ) -> Result<(FiniteRing, Vec<usize>)> {
        let incl = members.to_vec();
        let mut back = vec![usize::MAX; self.order];
        for (i, &x) in incl.iter().enumerate() {
            back[x] = i;
        }
        if !members.contains(self.zero) || !members.contains(one) {
            return Err(Error::ClosureFailure(
                "subset misses zero or identity".into(),
            ));
        }
        let n = incl.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &a in &incl {
            for &b in &incl {
                let s = back[self.add(a, b)];
                let p = back[self.mul(a, b)];
                if s == usize::MAX || p == usize::MAX {
                    return Err(Error::ClosureFailure(format!(
                        "{} not closed at ({}, {})",
                        self.name, self.labels[a], self.labels[b]
                    )));
                }
                add.push(s as u16);
                mul.push(p as u16);
            }
        }
        let labels = incl.iter().map(|&x| self.labels[x].clone()).collect();
        let ring = Self::from_flat(name.into(), n, add, mul, back[self.zero], back[one], labels)?;
        Ok((ring, incl))
    }

    /// Ring with identical tables but different labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<FiniteRing> {
        if labels.len() != self.order {
            return Err(Error::MalformedTable(
                "label count differs from order".into(),
            ));
        }
        Self::from_flat(
            self.name.clone(),
            self.order,
            self.add.clone(),
            self.mul.clone(),
            self.zero,
            self.one,
            labels,
        )
    }

    /// True when the two rings have identical tables and distinguished elements
    /// (names and labels are ignored).
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    pub fn add_row(&self, a: usize) -> &[u16] {
        &self.add[a * self.order..(a + 1) * self.order]
    }

    pub fn mul_row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }
}

/// `ℤ_n` with residues as carrier.
pub fn make_zmod(n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteRing::from_fn(
        format!("z{n}"),
        n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        1 % n,
        labels,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    MultiplicativeIdentity,
    ZeroEqualsOne,
}

/// One violated law with the lexicographically smallest witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: Law,
    pub witness: (usize, usize, usize),
}

/// Full-table scan of the ring laws. Empty iff `r` is a ring with identity.
pub fn check_ring_axioms(r: &FiniteRing) -> Vec<AxiomViolation> {
    let n = r.order();
    let mut out = Vec::new();
    let mut report = |law, w| {
        if !out.iter().any(|v: &AxiomViolation| v.law == law) {
            out.push(AxiomViolation { law, witness: w });
        }
    };
    for a in 0..n {
        if r.add(a, r.zero()) != a || r.add(r.zero(), a) != a {
            report(Law::AdditiveIdentity, (a, 0, 0));
        }
        if r.add(a, r.neg(a)) != r.zero() {
            report(Law::AdditiveInverse, (a, 0, 0));
        }
        if r.mul(a, r.one()) != a || r.mul(r.one(), a) != a {
            report(Law::MultiplicativeIdentity, (a, 0, 0));
        }
        for b in 0..n {
            if r.add(a, b) != r.add(b, a) {
                report(Law::AdditiveCommutativity, (a, b, 0));
            }
        }
    }
    if n > 1 && r.zero() == r.one() {
        report(Law::ZeroEqualsOne, (r.zero(), r.one(), 0));
    }
    for a in 0..n {
        for b in 0..n {
            let ab = r.mul(a, b);
            let apb = r.add(a, b);
            for c in 0..n {
                if r.add(apb, c) != r.add(a, r.add(b, c)) {
                    report(Law::AdditiveAssociativity, (a, b, c));
                }
                if r.mul(ab, c) != r.mul(a, r.mul(b, c)) {
                    report(Law::MultiplicativeAssociativity, (a, b, c));
                }
                if r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c)) {
                    report(Law::LeftDistributivity, (a, b, c));
                }
                if r.mul(apb, c) != r.add(r.mul(a, c), r.mul(b, c)) {
                    report(Law::RightDistributivity, (a, b, c));
                }
            }
        }
    }
    out
}

/// Mixed-radix codec for tuples over several carriers; component 0 is the
/// most significant digit so that tuple order and index order agree.
#[derive(Debug, Clone)]
pub struct Radix {
    pub sizes: Vec<usize>,
}

impl Radix {
    pub fn total(&self) -> u128 {
        self.sizes
            .iter()
            .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
    }
    pub fn encode(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.sizes)
            .fold(0, |acc, (&d, &s)| acc * s + d)
    }
    pub fn decode(&self, mut idx: usize, out: &mut [usize]) {
        for k in (0..self.sizes.len()).rev() {
            out[k] = idx % self.sizes[k];
            idx /= self.sizes[k];
        }
    }
}

/// Componentwise product `R_1 × … × R_k`; labels are `(a,b,…)`.
pub fn direct_product(rings: &[&FiniteRing]) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(Error::Invalid("direct product of an empty list".into()));
    }
    if rings.len() == 1 {
        return Ok(rings[0].clone());
    }
    let radix = Radix {
        sizes: rings.iter().map(|r| r.order()).collect(),
    };
    size_check("direct product", radix.total(), RING_SIZE_CAP as u128)?;
    let n = radix.total() as usize;
    let k = rings.len();
    let name = rings.iter().map(|r| r.name()).collect::<Vec<_>>().join("x");
    let mut da = vec![0; k];
    let mut db = vec![0; k];
    let mut dc = vec![0; k];
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        radix.decode(i, &mut da);
        let parts: Vec<&str> = da.iter().zip(rings).map(|(&d, r)| r.label(d)).collect();
        labels.push(format!("({})", parts.join(",")));
    }
    let op =
        |i: usize, j: usize, mul: bool, da: &mut [usize], db: &mut [usize], dc: &mut [usize]| {
            radix.decode(i, da);
            radix.decode(j, db);
            for t in 0..k {
                dc[t] = if mul {
                    rings[t].mul(da[t], db[t])
                } else {
                    rings[t].add(da[t], db[t])
                };
            }
            radix.encode(dc)
        };
    let zero = radix.encode(&rings.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = radix.encode(&rings.iter().map(|r| r.one()).collect::<Vec<_>>());
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            add.push(op(i, j, false, &mut da, &mut db, &mut dc) as u16);
            mul.push(op(i, j, true, &mut da, &mut db, &mut dc) as u16);
        }
    }
    FiniteRing::from_flat(name, n, add, mul, zero, one, labels)
}

/// Projection of a product built by [`direct_product`] onto factor `k`.
pub fn projection(rings: &[&FiniteRing], k: usize) -> RingMap {
    let radix = Radix {
        sizes: rings.iter().map(|r| r.order()).collect(),
    };
    let n = radix.total() as usize;
    let mut d = vec![0; rings.len()];
    let table = (0..n)
        .map(|i| {
            radix.decode(i, &mut d);
            d[k]
        })
        .collect();
    RingMap {
        source_order: n,
        target_order: rings[k].order(),
        table,
    }
}

/// A map between carriers; [`RingMap::validate`] checks it is a unital homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    pub source_order: usize,
    pub target_order: usize,
    pub table: Vec<usize>,
}

impl RingMap {
    pub fn new(source: &FiniteRing, target: &FiniteRing, table: Vec<usize>) -> Result<RingMap> {
        let m = RingMap {
            source_order: source.order(),
            target_order: target.order(),
            table,
        };
        m.validate(source, target)?;
        Ok(m)
    }

    pub fn identity(r: &FiniteRing) -> RingMap {
        RingMap {
            source_order: r.order(),
            target_order: r.order(),
            table: (0..r.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn validate(&self, source: &FiniteRing, target: &FiniteRing) -> Result<()> {
        if self.table.len() != source.order() || self.table.iter().any(|&x| x >= target.order()) {
            return Err(Error::NotAHomomorphism(
                "table does not match carriers".into(),
            ));
        }
        if self.table[source.zero()] != target.zero() {
            return Err(Error::NotAHomomorphism("zero not preserved".into()));
        }
        if self.table[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("one not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                let (fa, fb) = (self.table[a], self.table[b]);
                if self.table[source.add(a, b)] != target.add(fa, fb) {
                    return Err(Error::NotAHomomorphism(format!("addition at ({a},{b})")));
                }
                if self.table[source.mul(a, b)] != target.mul(fa, fb) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplication at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        self.table
            .iter()
            .all(|&x| !core::mem::replace(&mut seen[x], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.source_order == self.target_order && self.is_injective()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RingMap) -> RingMap {
        RingMap {
            source_order: self.source_order,
            target_order: next.target_order,
            table: self.table.iter().map(|&x| next.table[x]).collect(),
        }
    }

    pub fn image_of(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_iter(self.target_order, s.iter().map(|x| self.table[x]))
    }
}

/// An endomorphism with `α(1) = 1`, with its iterates tabulated on demand.
#[derive(Debug, Clone)]
pub struct Endomorphism {
    map: RingMap,
    name: String,
}

impl Endomorphism {
    pub fn new(r: &FiniteRing, table: Vec<usize>, name: impl Into<String>) -> Result<Self> {
        Ok(Endomorphism {
            map: RingMap::new(r, r, table)?,
            name: name.into(),
        })
    }

    pub fn identity(r: &FiniteRing) -> Self {
        Endomorphism {
            map: RingMap::identity(r),
            name: "id".into(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.table.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map.apply(a)
    }

    /// `α^k(a)`.
    pub fn apply_pow(&self, k: usize, mut a: usize) -> usize {
        for _ in 0..k {
            a = self.map.apply(a);
        }
        a
    }

    /// Tables of `α^0, …, α^(count-1)`.
    pub fn powers(&self, count: usize) -> Vec<Vec<usize>> {
        let n = self.map.table.len();
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(count);
        let mut cur: Vec<usize> = (0..n).collect();
        for _ in 0..count {
            let next = cur.iter().map(|&x| self.map.apply(x)).collect();
            out.push(core::mem::replace(&mut cur, next));
        }
        out
    }
}

/// The coordinate swap on a two-factor product ring `S × S`, as built by
/// [`direct_product`].
pub fn swap_endomorphism(product: &FiniteRing, factor_order: usize) -> Result<Endomorphism> {
    if factor_order * factor_order != product.order() {
        return Err(Error::Invalid("swap needs a square product".into()));
    }
    let table = (0..product.order())
        .map(|i| (i % factor_order) * factor_order + i / factor_order)
        .collect();
    Endomorphism::new(product, table, "swap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_basics() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.add(z2.one(), z2.one()), z2.zero());
        let z12 = make_zmod(12).unwrap();
        assert_eq!(z12.mul(4, 3), 0);
        let z4 = make_zmod(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        assert!(z12.is_commutative());
        assert_eq!(make_zmod(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn axioms_hold_and_corruption_is_caught() {
        assert!(check_ring_axioms(&make_zmod(6).unwrap()).is_empty());
        let trivial = make_zmod(1).unwrap();
        assert!(check_ring_axioms(&trivial).is_empty());
        assert_eq!(trivial.zero(), trivial.one());

        let z4 = make_zmod(4).unwrap();
        let add: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| z4.add(a, b)).collect())
            .collect();
        let mut mul: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| z4.mul(a, b)).collect())
            .collect();
        mul[2][3] = 1;
        let bad = FiniteRing::from_tables(
            "bad",
            add,
            mul,
            0,
            1,
            (0..4).map(|i| i.to_string()).collect(),
        )
        .unwrap();
        let report = check_ring_axioms(&bad);
        assert!(!report.is_empty());
        let laws: Vec<Law> = report.iter().map(|v| v.law).collect();
        assert!(
            laws.contains(&Law::MultiplicativeAssociativity)
                || laws.contains(&Law::LeftDistributivity)
                || laws.contains(&Law::RightDistributivity)
        );
        // every reported witness actually violates its law
        for v in &report {
            let (a, b, c) = v.witness;
            match v.law {
                Law::MultiplicativeAssociativity => {
                    assert_ne!(bad.mul(bad.mul(a, b), c), bad.mul(a, bad.mul(b, c)))
                }
                Law::LeftDistributivity => {
                    assert_ne!(
                        bad.mul(a, bad.add(b, c)),
                        bad.add(bad.mul(a, b), bad.mul(a, c))
                    )
                }
                Law::RightDistributivity => {
                    assert_ne!(
                        bad.mul(bad.add(a, b), c),
                        bad.add(bad.mul(a, c), bad.mul(b, c))
                    )
                }
                Law::MultiplicativeIdentity => {
                    assert!(bad.mul(a, 1) != a || bad.mul(1, a) != a)
                }
                _ => {}
            }
        }
    }

    #[test]
    fn products() {
        let z2 = make_zmod(2).unwrap();
        let z3 = make_zmod(3).unwrap();
        let z4 = make_zmod(4).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.label(p.one()), "(1,1)");
        assert!(check_ring_axioms(&p).is_empty());
        let single = direct_product(&[&z4]).unwrap();
        assert!(single.same_tables(&z4));
        let z2z3 = direct_product(&[&z2, &z3]).unwrap();
        for k in 0..2 {
            let f = [&z2, &z3][k];
            projection(&[&z2, &z3], k).validate(&z2z3, f).unwrap();
        }
    }

    #[test]
    fn swap_is_an_endomorphism() {
        let z2 = make_zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2]).unwrap();
        let s = swap_endomorphism(&p, 2).unwrap();
        let ab = p.index_of("(1,0)").unwrap();
        assert_eq!(p.label(s.apply(ab)), "(0,1)");
        assert_eq!(s.apply_pow(2, ab), ab);
    }
}
