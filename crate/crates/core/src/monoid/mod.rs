//! Finite table monoids and structured infinite monoids.
//!
//! Infinite monoids expose only identity, product, equality and bounded
//! fragments; every check over an infinite monoid is a bounded-support check.

mod predicates;

pub use predicates::{
    finite_order_element, is_cancellative, lex_order, monoid_ideal_check, submonoid_fragment,
    torsion_check_fg_abelian, up_violation_search, CancelWitness, OrderedMonoidWitness, UpStatus,
};

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest number of elements in a fragment or a materialized finite monoid.
pub const FRAGMENT_CAP: usize = 4096;

/// Canonical element encoding. The derived order is the canonical term order
/// of monoid-ring elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonoidElem {
    /// Table monoids and residues of a cyclic group.
    Index(usize),
    /// Exponent vectors of free commutative and f.g. abelian monoids.
    Vector(Vec<i64>),
    /// Generator-index strings of free (or nil-truncated) word monoids.
    Word(Vec<u8>),
    /// Absorbing element of a nil-truncated word monoid.
    Zero,
    /// Components of a product or coproduct.
    Tuple(Vec<MonoidElem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMonoid {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidKind {
    Table(TableMonoid),
    /// `ℕ^k` under addition.
    FreeCommutative(usize),
    /// Words over `generators` letters; with `nil_degree = Some(n)` every word
    /// of length `≥ n` is identified with an absorbing zero.
    FreeWord {
        generators: usize,
        nil_degree: Option<usize>,
    },
    /// `ℤ/n`, written multiplicatively.
    Cyclic(usize),
    /// `⊕ ℤ/d_i` with `d_i = 0` standing for a free factor `ℤ`.
    FgAbelian(Vec<u64>),
    Product(Box<Monoid>, Box<Monoid>),
    /// Finite-support tuples; for a finite list this is the product.
    Coproduct(Vec<Monoid>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid {
    name: String,
    kind: MonoidKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FragmentBound {
    /// Every element of a finite monoid.
    Whole,
    /// Elements of degree at most `d`.
    Degree(usize),
}

/// A finite ordered list of distinct elements, containing the identity unless
/// built by [`MonoidFragment::from_semigroup_elements`].
/// Products of fragment elements are taken in the ambient monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidFragment {
    monoid_name: String,
    bound: FragmentBound,
    elements: Vec<MonoidElem>,
    position: BTreeMap<MonoidElem, usize>,
}

impl MonoidFragment {
    pub(crate) fn new(
        monoid: &Monoid,
        bound: FragmentBound,
        elements: Vec<MonoidElem>,
    ) -> Result<Self> {
        let f = Self::unchecked_identity(monoid, bound, elements)?;
        if !f.position.contains_key(&monoid.identity()) {
            return Err(Error::Monoid("fragment must contain the identity".into()));
        }
        Ok(f)
    }

    /// A support set that need not contain the identity, e.g. a finite piece
    /// of a monoid ideal. Products are still taken in `monoid`.
    pub fn from_semigroup_elements(monoid: &Monoid, elements: Vec<MonoidElem>) -> Result<Self> {
        let bound =
            FragmentBound::Degree(elements.iter().map(|e| monoid.degree(e)).max().unwrap_or(0));
        Self::unchecked_identity(monoid, bound, elements)
    }

    fn unchecked_identity(
        monoid: &Monoid,
        bound: FragmentBound,
        elements: Vec<MonoidElem>,
    ) -> Result<Self> {
        if elements.len() > FRAGMENT_CAP {
            return Err(Error::SizeCap {
                what: format!("fragment of {}", monoid.name),
                requested: elements.len() as u128,
                cap: FRAGMENT_CAP as u128,
            });
        }
        let mut position = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if !monoid.contains(e) {
                return Err(Error::Monoid(format!(
                    "{e:?} is not an element of {}",
                    monoid.name
                )));
            }
            if position.insert(e.clone(), i).is_some() {
                return Err(Error::Monoid(format!(
                    "duplicate fragment element {}",
                    monoid.format_elem(e)
                )));
            }
        }
        Ok(MonoidFragment {
            monoid_name: monoid.name.clone(),
            bound,
            elements,
            position,
        })
    }

    /// A fragment with an explicit element list, validated against `monoid`.
    pub fn from_elements(monoid: &Monoid, elements: Vec<MonoidElem>) -> Result<Self> {
        let bound =
            FragmentBound::Degree(elements.iter().map(|e| monoid.degree(e)).max().unwrap_or(0));
        Self::new(monoid, bound, elements)
    }

    pub fn elements(&self) -> &[MonoidElem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bound(&self) -> FragmentBound {
        self.bound
    }

    pub fn monoid_name(&self) -> &str {
        &self.monoid_name
    }

    pub fn position(&self, e: &MonoidElem) -> Option<usize> {
        self.position.get(e).copied()
    }

    /// Human-readable bound, e.g. `nat deg<=2` or `c2 whole`.
    pub fn descriptor(&self) -> String {
        match self.bound {
            FragmentBound::Whole => format!("{} whole", self.monoid_name),
            FragmentBound::Degree(d) => format!("{} deg<={d}", self.monoid_name),
        }
    }
}

impl Monoid {
    pub fn new(name: impl Into<String>, kind: MonoidKind) -> Result<Monoid> {
        match &kind {
            MonoidKind::Cyclic(0) => return Err(Error::Monoid("cyclic group of order 0".into())),
            MonoidKind::FreeCommutative(0) => {
                return Err(Error::Monoid("free commutative monoid of rank 0".into()))
            }
            MonoidKind::FreeWord {
                generators,
                nil_degree,
            } => {
                if *generators == 0 || *generators > 26 || *nil_degree == Some(0) {
                    return Err(Error::Monoid(
                        "word monoid needs 1..=26 generators and nil degree ≥ 1".into(),
                    ));
                }
            }
            MonoidKind::FgAbelian(f) if f.is_empty() => {
                return Err(Error::Monoid("no invariant factors".into()))
            }
            MonoidKind::Coproduct(list) if list.is_empty() => {
                return Err(Error::Monoid("empty coproduct".into()))
            }
            _ => {}
        }
        Ok(Monoid {
            name: name.into(),
            kind,
        })
    }

    /// Table monoid after an exhaustive associativity and identity scan.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
        labels: Vec<String>,
    ) -> Result<Monoid> {
        let n = table.len();
        if n == 0 || labels.len() != n || identity >= n {
            return Err(Error::Monoid("table, labels and identity disagree".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::Monoid("ragged or out-of-range table".into()));
            }
            flat.extend_from_slice(row);
        }
        for a in 0..n {
            if flat[identity * n + a] != a || flat[a * n + identity] != a {
                return Err(Error::Monoid(format!(
                    "identity law fails at {}",
                    labels[a]
                )));
            }
            for b in 0..n {
                for c in 0..n {
                    if flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(Error::Monoid(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut seen = BTreeMap::new();
        for l in &labels {
            if seen.insert(l.clone(), ()).is_some() || l.is_empty() {
                return Err(Error::Monoid(format!("bad label {l:?}")));
            }
        }
        Ok(Monoid {
            name: name.into(),
            kind: MonoidKind::Table(TableMonoid {
                order: n,
                table: flat,
                identity,
                labels,
            }),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn kind(&self) -> &MonoidKind {
        &self.kind
    }

    pub fn identity(&self) -> MonoidElem {
        match &self.kind {
            MonoidKind::Table(t) => MonoidElem::Index(t.identity),
            MonoidKind::FreeCommutative(k) => MonoidElem::Vector(vec![0; *k]),
            MonoidKind::FreeWord { .. } => MonoidElem::Word(Vec::new()),
            MonoidKind::Cyclic(_) => MonoidElem::Index(0),
            MonoidKind::FgAbelian(f) => MonoidElem::Vector(vec![0; f.len()]),
            MonoidKind::Product(m, n) => MonoidElem::Tuple(vec![m.identity(), n.identity()]),
            MonoidKind::Coproduct(list) => {
                MonoidElem::Tuple(list.iter().map(Monoid::identity).collect())
            }
        }
    }

    /// Whether `e` is a canonical element of this monoid.
    pub fn contains(&self, e: &MonoidElem) -> bool {
        match (&self.kind, e) {
            (MonoidKind::Table(t), MonoidElem::Index(i)) => *i < t.order,
            (MonoidKind::Cyclic(n), MonoidElem::Index(i)) => i < n,
            (MonoidKind::FreeCommutative(k), MonoidElem::Vector(v)) => {
                v.len() == *k && v.iter().all(|&x| x >= 0)
            }
            (MonoidKind::FgAbelian(f), MonoidElem::Vector(v)) => {
                v.len() == f.len()
                    && v.iter()
                        .zip(f)
                        .all(|(&x, &d)| d == 0 || (x >= 0 && (x as u64) < d))
            }
            (
                MonoidKind::FreeWord {
                    generators,
                    nil_degree,
                },
                MonoidElem::Word(w),
            ) => {
                w.iter().all(|&c| (c as usize) < *generators)
                    && nil_degree.is_none_or(|n| w.len() < n)
            }
            (MonoidKind::FreeWord { nil_degree, .. }, MonoidElem::Zero) => nil_degree.is_some(),
            (MonoidKind::Product(m, n), MonoidElem::Tuple(t)) => {
                t.len() == 2 && m.contains(&t[0]) && n.contains(&t[1])
            }
            (MonoidKind::Coproduct(list), MonoidElem::Tuple(t)) => {
                t.len() == list.len() && list.iter().zip(t).all(|(m, x)| m.contains(x))
            }
            _ => false,
        }
    }

    /// The monoid product. Both arguments must satisfy [`Monoid::contains`].
    pub fn op(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        match (&self.kind, a, b) {
            (MonoidKind::Table(t), MonoidElem::Index(x), MonoidElem::Index(y)) => {
                MonoidElem::Index(t.table[x * t.order + y])
            }
            (MonoidKind::Cyclic(n), MonoidElem::Index(x), MonoidElem::Index(y)) => {
                MonoidElem::Index((x + y) % n)
            }
            (MonoidKind::FreeCommutative(_), MonoidElem::Vector(x), MonoidElem::Vector(y)) => {
                MonoidElem::Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (MonoidKind::FgAbelian(f), MonoidElem::Vector(x), MonoidElem::Vector(y)) => {
                MonoidElem::Vector(
                    x.iter()
                        .zip(y)
                        .zip(f)
                        .map(|((p, q), &d)| {
                            if d == 0 {
                                p + q
                            } else {
                                (p + q).rem_euclid(d as i64)
                            }
                        })
                        .collect(),
                )
            }
            (MonoidKind::FreeWord { nil_degree, .. }, MonoidElem::Word(x), MonoidElem::Word(y)) => {
                if nil_degree.is_some_and(|n| x.len() + y.len() >= n) {
                    MonoidElem::Zero
                } else {
                    let mut w = x.clone();
                    w.extend_from_slice(y);
                    MonoidElem::Word(w)
                }
            }
            (MonoidKind::FreeWord { .. }, _, _) => MonoidElem::Zero,
            (MonoidKind::Product(m, n), MonoidElem::Tuple(x), MonoidElem::Tuple(y)) => {
                MonoidElem::Tuple(vec![m.op(&x[0], &y[0]), n.op(&x[1], &y[1])])
            }
            (MonoidKind::Coproduct(list), MonoidElem::Tuple(x), MonoidElem::Tuple(y)) => {
                MonoidElem::Tuple(
                    list.iter()
                        .zip(x.iter().zip(y))
                        .map(|(m, (p, q))| m.op(p, q))
                        .collect(),
                )
            }
            _ => panic!("foreign element passed to {}", self.name),
        }
    }

    /// `g^k`.
    pub fn pow(&self, g: &MonoidElem, k: usize) -> MonoidElem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.op(&acc, g);
        }
        acc
    }

    /// Size of an element: total exponent (free coordinates only for f.g.
    /// abelian), word length, or the maximum over components. Finite kinds and
    /// the word-monoid zero have degree 0.
    pub fn degree(&self, e: &MonoidElem) -> usize {
        match (&self.kind, e) {
            (MonoidKind::FreeCommutative(_), MonoidElem::Vector(v)) => {
                v.iter().map(|&x| x as usize).sum()
            }
            (MonoidKind::FgAbelian(f), MonoidElem::Vector(v)) => v
                .iter()
                .zip(f)
                .filter(|(_, &d)| d == 0)
                .map(|(&x, _)| x.unsigned_abs() as usize)
                .sum(),
            (MonoidKind::FreeWord { .. }, MonoidElem::Word(w)) => w.len(),
            (MonoidKind::Product(m, n), MonoidElem::Tuple(t)) => {
                m.degree(&t[0]).max(n.degree(&t[1]))
            }
            (MonoidKind::Coproduct(list), MonoidElem::Tuple(t)) => list
                .iter()
                .zip(t)
                .map(|(m, x)| m.degree(x))
                .max()
                .unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.kind {
            MonoidKind::Table(_) | MonoidKind::Cyclic(_) => true,
            MonoidKind::FreeCommutative(_) => false,
            MonoidKind::FreeWord { nil_degree, .. } => nil_degree.is_some(),
            MonoidKind::FgAbelian(f) => f.iter().all(|&d| d != 0),
            MonoidKind::Product(m, n) => m.is_finite() && n.is_finite(),
            MonoidKind::Coproduct(list) => list.iter().all(Monoid::is_finite),
        }
    }

    /// All elements of a finite monoid in canonical order.
    pub fn elements(&self) -> Result<Vec<MonoidElem>> {
        if !self.is_finite() {
            return Err(Error::Monoid(format!("{} is infinite", self.name)));
        }
        let out = match &self.kind {
            MonoidKind::Table(t) => (0..t.order).map(MonoidElem::Index).collect(),
            MonoidKind::Cyclic(n) => (0..*n).map(MonoidElem::Index).collect(),
            MonoidKind::FgAbelian(f) => {
                let ranges: Vec<Vec<i64>> = f.iter().map(|&d| (0..d as i64).collect()).collect();
                cartesian_vectors(&ranges)?
                    .into_iter()
                    .map(MonoidElem::Vector)
                    .collect()
            }
            MonoidKind::FreeWord {
                generators,
                nil_degree,
            } => {
                let mut out = words_up_to(*generators, nil_degree.unwrap() - 1)?;
                out.push(MonoidElem::Zero);
                out
            }
            MonoidKind::Product(m, n) => tuples(&[m.elements()?, n.elements()?])?,
            MonoidKind::Coproduct(list) => tuples(
                &list
                    .iter()
                    .map(Monoid::elements)
                    .collect::<Result<Vec<_>>>()?,
            )?,
            MonoidKind::FreeCommutative(_) => unreachable!(),
        };
        if out.len() > FRAGMENT_CAP {
            return Err(Error::SizeCap {
                what: format!("monoid {}", self.name),
                requested: out.len() as u128,
                cap: FRAGMENT_CAP as u128,
            });
        }
        Ok(out)
    }

    pub fn order(&self) -> Option<usize> {
        self.elements().ok().map(|e| e.len())
    }

    /// Elements of degree at most `d`, ordered by degree then encoding. A finite
    /// monoid always yields its whole carrier in canonical order.
    pub fn fragment(&self, d: usize) -> Result<MonoidFragment> {
        if self.is_finite() {
            return MonoidFragment::new(self, FragmentBound::Whole, self.elements()?);
        }
        let mut elems = self.bounded(d)?;
        elems.sort_by(|a, b| (self.degree(a), a).cmp(&(self.degree(b), b)));
        MonoidFragment::new(self, FragmentBound::Degree(d), elems)
    }

    /// Unsorted elements of degree at most `d`.
    fn bounded(&self, d: usize) -> Result<Vec<MonoidElem>> {
        let out = match &self.kind {
            MonoidKind::FreeCommutative(k) => {
                let ranges: Vec<Vec<i64>> = vec![(0..=d as i64).collect(); *k];
                cartesian_vectors(&ranges)?
                    .into_iter()
                    .filter(|v| v.iter().sum::<i64>() <= d as i64)
                    .map(MonoidElem::Vector)
                    .collect()
            }
            MonoidKind::FgAbelian(f) => {
                let ranges: Vec<Vec<i64>> = f
                    .iter()
                    .map(|&m| {
                        if m == 0 {
                            (-(d as i64)..=d as i64).collect()
                        } else {
                            (0..m as i64).collect()
                        }
                    })
                    .collect();
                let free: Vec<bool> = f.iter().map(|&m| m == 0).collect();
                cartesian_vectors(&ranges)?
                    .into_iter()
                    .filter(|v| {
                        v.iter()
                            .zip(&free)
                            .filter(|(_, &fr)| fr)
                            .map(|(x, _)| x.abs())
                            .sum::<i64>()
                            <= d as i64
                    })
                    .map(MonoidElem::Vector)
                    .collect()
            }
            MonoidKind::FreeWord {
                generators,
                nil_degree,
            } => {
                let top = nil_degree.map_or(d, |n| d.min(n - 1));
                let mut out = words_up_to(*generators, top)?;
                if nil_degree.is_some() {
                    out.push(MonoidElem::Zero);
                }
                out
            }
            MonoidKind::Product(m, n) => tuples(&[m.bounded_or_all(d)?, n.bounded_or_all(d)?])?,
            MonoidKind::Coproduct(list) => tuples(
                &list
                    .iter()
                    .map(|m| m.bounded_or_all(d))
                    .collect::<Result<Vec<_>>>()?,
            )?,
            _ => self.elements()?,
        };
        if out.len() > FRAGMENT_CAP {
            return Err(Error::SizeCap {
                what: format!("fragment of {}", self.name),
                requested: out.len() as u128,
                cap: FRAGMENT_CAP as u128,
            });
        }
        Ok(out)
    }

    fn bounded_or_all(&self, d: usize) -> Result<Vec<MonoidElem>> {
        if self.is_finite() {
            self.elements()
        } else {
            let mut v = self.bounded(d)?;
            v.sort_by(|a, b| (self.degree(a), a).cmp(&(self.degree(b), b)));
            Ok(v)
        }
    }

    /// Twist exponent for skew products: the degree.
    pub fn grading(&self, e: &MonoidElem) -> usize {
        self.degree(e)
    }

    /// Canonical literal; [`Monoid::parse_elem`] inverts it.
    pub fn format_elem(&self, e: &MonoidElem) -> String {
        match (&self.kind, e) {
            (MonoidKind::Table(t), MonoidElem::Index(i)) => t.labels[*i].clone(),
            (MonoidKind::Cyclic(_), MonoidElem::Index(i)) => power_label("g", *i as i64),
            (MonoidKind::FreeCommutative(_) | MonoidKind::FgAbelian(_), MonoidElem::Vector(v)) => {
                let parts: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        let g = if v.len() == 1 {
                            "g".to_string()
                        } else {
                            format!("g{}", i + 1)
                        };
                        power_label(&g, x)
                    })
                    .collect();
                if parts.is_empty() {
                    "e".into()
                } else {
                    parts.join(".")
                }
            }
            (MonoidKind::FreeWord { .. }, MonoidElem::Word(w)) => {
                if w.is_empty() {
                    "e".into()
                } else {
                    w.iter().map(|&c| (b'a' + c) as char).collect()
                }
            }
            (MonoidKind::FreeWord { .. }, MonoidElem::Zero) => "0".into(),
            (MonoidKind::Product(m, n), MonoidElem::Tuple(t)) => {
                format!("({},{})", m.format_elem(&t[0]), n.format_elem(&t[1]))
            }
            (MonoidKind::Coproduct(list), MonoidElem::Tuple(t)) => {
                let parts: Vec<String> =
                    list.iter().zip(t).map(|(m, x)| m.format_elem(x)).collect();
                format!("<{}>", parts.join(","))
            }
            _ => format!("{e:?}"),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<MonoidElem> {
        let s = s.trim();
        let bad = || Error::Parse(format!("{s:?} is not an element of {}", self.name));
        let e = match &self.kind {
            MonoidKind::Table(t) => {
                MonoidElem::Index(t.labels.iter().position(|l| l == s).ok_or_else(bad)?)
            }
            MonoidKind::Cyclic(n) => {
                let k = parse_power(s, "g").ok_or_else(bad)?;
                MonoidElem::Index(k.rem_euclid(*n as i64) as usize)
            }
            MonoidKind::FreeCommutative(_) | MonoidKind::FgAbelian(_) => {
                let rank = match &self.kind {
                    MonoidKind::FgAbelian(f) => f.len(),
                    MonoidKind::FreeCommutative(k) => *k,
                    _ => unreachable!(),
                };
                let mut v = vec![0i64; rank];
                if s != "e" {
                    for part in s.split('.') {
                        let (base, exp) = match part.split_once('^') {
                            Some((b, x)) => (b, x.parse::<i64>().map_err(|_| bad())?),
                            None => (part, 1),
                        };
                        let i = if rank == 1 && base == "g" {
                            0
                        } else {
                            base.strip_prefix('g')
                                .and_then(|x| x.parse::<usize>().ok())
                                .filter(|&i| i >= 1 && i <= rank)
                                .ok_or_else(bad)?
                                - 1
                        };
                        v[i] += exp;
                    }
                }
                if let MonoidKind::FgAbelian(f) = &self.kind {
                    for (x, &d) in v.iter_mut().zip(f) {
                        if d != 0 {
                            *x = x.rem_euclid(d as i64);
                        }
                    }
                }
                MonoidElem::Vector(v)
            }
            MonoidKind::FreeWord {
                generators,
                nil_degree,
            } => {
                if s == "0" && nil_degree.is_some() {
                    MonoidElem::Zero
                } else if s == "e" {
                    MonoidElem::Word(Vec::new())
                } else {
                    let w: Vec<u8> = s.bytes().map(|c| c.wrapping_sub(b'a')).collect();
                    if w.iter().any(|&c| c as usize >= *generators) {
                        return Err(bad());
                    }
                    if nil_degree.is_some_and(|n| w.len() >= n) {
                        MonoidElem::Zero
                    } else {
                        MonoidElem::Word(w)
                    }
                }
            }
            MonoidKind::Product(m, n) => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let parts = split_top_level(inner);
                if parts.len() != 2 {
                    return Err(bad());
                }
                MonoidElem::Tuple(vec![m.parse_elem(parts[0])?, n.parse_elem(parts[1])?])
            }
            MonoidKind::Coproduct(list) => {
                let inner = s
                    .strip_prefix('<')
                    .and_then(|x| x.strip_suffix('>'))
                    .ok_or_else(bad)?;
                let parts = split_top_level(inner);
                if parts.len() != list.len() {
                    return Err(bad());
                }
                MonoidElem::Tuple(
                    list.iter()
                        .zip(parts)
                        .map(|(m, p)| m.parse_elem(p))
                        .collect::<Result<_>>()?,
                )
            }
        };
        if !self.contains(&e) {
            return Err(bad());
        }
        Ok(e)
    }

    /// Multiplication table over [`Monoid::elements`], as positions.
    pub fn finite_table(&self) -> Result<(Vec<MonoidElem>, Vec<usize>)> {
        let elems = self.elements()?;
        let pos: BTreeMap<&MonoidElem, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = Vec::with_capacity(elems.len() * elems.len());
        for a in &elems {
            for b in &elems {
                table.push(pos[&self.op(a, b)]);
            }
        }
        Ok((elems, table))
    }
}

fn power_label(g: &str, k: i64) -> String {
    match k {
        0 => "e".into(),
        1 => g.into(),
        _ => format!("{g}^{k}"),
    }
}

fn parse_power(s: &str, g: &str) -> Option<i64> {
    if s == "e" {
        return Some(0);
    }
    let rest = s.strip_prefix(g)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

/// Splits on commas not nested inside `()`, `[]` or `<>`.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '<' => depth += 1,
            ')' | ']' | '>' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn cartesian_vectors(ranges: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let total = ranges
        .iter()
        .fold(1u128, |acc, r| acc.saturating_mul(r.len() as u128));
    if total > (FRAGMENT_CAP as u128) * 64 {
        return Err(Error::SizeCap {
            what: "vector enumeration".into(),
            requested: total,
            cap: FRAGMENT_CAP as u128 * 64,
        });
    }
    let mut out = vec![Vec::new()];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|v| {
                r.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

fn tuples(factors: &[Vec<MonoidElem>]) -> Result<Vec<MonoidElem>> {
    let total = factors
        .iter()
        .fold(1u128, |acc, r| acc.saturating_mul(r.len() as u128));
    if total > FRAGMENT_CAP as u128 {
        return Err(Error::SizeCap {
            what: "product enumeration".into(),
            requested: total,
            cap: FRAGMENT_CAP as u128,
        });
    }
    let mut out: Vec<Vec<MonoidElem>> = vec![Vec::new()];
    for f in factors {
        out = out
            .into_iter()
            .flat_map(|v| {
                f.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(MonoidElem::Tuple).collect())
}

/// Words of length `≤ max_len` in length-then-lexicographic order.
fn words_up_to(generators: usize, max_len: usize) -> Result<Vec<MonoidElem>> {
    let mut out = vec![MonoidElem::Word(Vec::new())];
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..generators as u8 {
                let mut x = w.clone();
                x.push(c);
                next.push(x);
            }
        }
        if out.len() + next.len() > FRAGMENT_CAP {
            return Err(Error::SizeCap {
                what: "word enumeration".into(),
                requested: (out.len() + next.len()) as u128,
                cap: FRAGMENT_CAP as u128,
            });
        }
        out.extend(next.iter().cloned().map(MonoidElem::Word));
        layer = next;
    }
    Ok(out)
}

/// `{0, I, E11, E12, E21, E22}` under matrix multiplication, indexed
/// `[I, E11, E12, E21, E22, 0]`.
pub fn make_matrix_unit_monoid() -> Monoid {
    // (row, col) for E11..E22 at indices 1..=4
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let idx = |(r, c): (usize, usize)| 1 + (r - 1) * 2 + (c - 1);
    let mut table = vec![vec![5; 6]; 6];
    for (a, row) in table.iter_mut().enumerate() {
        row[0] = a;
    }
    table[0] = (0..6).collect();
    for &(i, j) in &units {
        for &(k, l) in &units {
            table[idx((i, j))][idx((k, l))] = if j == k { idx((i, l)) } else { 5 };
        }
    }
    let labels = ["I", "E11", "E12", "E21", "E22", "0"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Monoid::from_table("matrix-units", table, 0, labels).expect("matrix-unit table is a monoid")
}

/// `{e, z}` with `z·z = z`.
pub fn make_lz2() -> Monoid {
    Monoid::from_table(
        "lz2",
        vec![vec![0, 1], vec![1, 1]],
        0,
        vec!["e".into(), "z".into()],
    )
    .expect("lz2")
}

/// The one-element monoid.
pub fn trivial_monoid() -> Monoid {
    Monoid::from_table("trivial", vec![vec![0]], 0, vec!["e".into()]).expect("trivial")
}

pub fn cyclic_group(n: usize) -> Result<Monoid> {
    Monoid::new(format!("c{n}"), MonoidKind::Cyclic(n))
}

pub fn free_commutative(k: usize) -> Result<Monoid> {
    let name = if k == 1 {
        "nat".to_string()
    } else {
        format!("nat{k}")
    };
    Monoid::new(name, MonoidKind::FreeCommutative(k))
}

pub fn free_word(generators: usize, nil_degree: Option<usize>) -> Result<Monoid> {
    let name = match nil_degree {
        None => format!("free{generators}"),
        Some(n) => format!("nilword({generators},{n})"),
    };
    Monoid::new(
        name,
        MonoidKind::FreeWord {
            generators,
            nil_degree,
        },
    )
}

pub fn fg_abelian(factors: Vec<u64>) -> Result<Monoid> {
    let name = format!(
        "ab({})",
        factors
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Monoid::new(name, MonoidKind::FgAbelian(factors))
}

pub fn product_monoid(m: &Monoid, n: &Monoid) -> Monoid {
    Monoid {
        name: format!("prod({},{})", m.name, n.name),
        kind: MonoidKind::Product(Box::new(m.clone()), Box::new(n.clone())),
    }
}

pub fn coproduct_monoid(list: &[Monoid]) -> Result<Monoid> {
    let name = format!(
        "coprod({})",
        list.iter()
            .map(|m| m.name.as_str())
            .collect::<Vec<_>>()
            .join(",")
    );
    Monoid::new(name, MonoidKind::Coproduct(list.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_products() {
        let m = make_matrix_unit_monoid();
        let p = |a: &str, b: &str| {
            m.format_elem(&m.op(&m.parse_elem(a).unwrap(), &m.parse_elem(b).unwrap()))
        };
        assert_eq!(p("E22", "E11"), "0");
        assert_eq!(p("I", "E12"), "E12");
        assert_eq!(p("E12", "E21"), "E11");
        assert_eq!(p("0", "I"), "0");
        assert_eq!(m.order(), Some(6));
    }

    #[test]
    fn bad_tables_rejected() {
        // a·b = b for all a, but with identity 0: 1·0 must be 1
        let t = vec![vec![0, 1], vec![0, 1]];
        assert!(Monoid::from_table("x", t, 0, vec!["e".into(), "a".into()]).is_err());
    }

    #[test]
    fn fragments() {
        let nat = free_commutative(1).unwrap();
        let f = nat.fragment(3).unwrap();
        let labels: Vec<String> = f.elements().iter().map(|e| nat.format_elem(e)).collect();
        assert_eq!(labels, ["e", "g", "g^2", "g^3"]);
        let nat2 = free_commutative(2).unwrap();
        assert_eq!(nat2.fragment(2).unwrap().len(), 6);
        let p = product_monoid(&nat, &cyclic_group(2).unwrap());
        assert_eq!(p.fragment(2).unwrap().len(), 6);
        let c3 = cyclic_group(3).unwrap();
        assert_eq!(c3.fragment(0).unwrap().len(), 3);
        let w = free_word(2, None).unwrap();
        assert_eq!(w.fragment(2).unwrap().len(), 7);
        let nil = free_word(1, Some(3)).unwrap();
        assert_eq!(nil.elements().unwrap().len(), 4);
    }

    #[test]
    fn literals_round_trip() {
        let monoids = [
            make_matrix_unit_monoid(),
            make_lz2(),
            cyclic_group(4).unwrap(),
            free_commutative(1).unwrap(),
            free_commutative(2).unwrap(),
            free_word(2, None).unwrap(),
            free_word(1, Some(3)).unwrap(),
            fg_abelian(vec![0, 3]).unwrap(),
            product_monoid(&free_commutative(1).unwrap(), &cyclic_group(2).unwrap()),
            coproduct_monoid(&[
                make_lz2(),
                cyclic_group(2).unwrap(),
                free_commutative(1).unwrap(),
            ])
            .unwrap(),
        ];
        for m in &monoids {
            for e in m.fragment(2).unwrap().elements() {
                let s = m.format_elem(e);
                assert_eq!(&m.parse_elem(&s).unwrap(), e, "{} in {}", s, m.name());
            }
        }
        let nat2 = free_commutative(2).unwrap();
        assert_eq!(nat2.format_elem(&MonoidElem::Vector(vec![2, 1])), "g1^2.g2");
        let ab = fg_abelian(vec![0]).unwrap();
        assert_eq!(ab.format_elem(&MonoidElem::Vector(vec![-1])), "g^-1");
    }

    #[test]
    fn identity_laws_on_fragments() {
        let monoids = [
            free_commutative(2).unwrap(),
            free_word(2, Some(3)).unwrap(),
            fg_abelian(vec![0, 2]).unwrap(),
            product_monoid(&make_lz2(), &free_commutative(1).unwrap()),
        ];
        for m in &monoids {
            let e = m.identity();
            for x in m.fragment(2).unwrap().elements() {
                assert_eq!(&m.op(&e, x), x);
                assert_eq!(&m.op(x, &e), x);
            }
        }
    }

    #[test]
    fn single_factor_coproduct() {
        let c3 = cyclic_group(3).unwrap();
        let co = coproduct_monoid(std::slice::from_ref(&c3)).unwrap();
        let ce = co.elements().unwrap();
        for (i, a) in c3.elements().unwrap().iter().enumerate() {
            for (j, b) in c3.elements().unwrap().iter().enumerate() {
                assert_eq!(co.op(&ce[i], &ce[j]), MonoidElem::Tuple(vec![c3.op(a, b)]));
            }
        }
    }
}
