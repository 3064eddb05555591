//! Finite-support elements of `R[M]`, skew products, and materialized monoid
//! rings of finite monoids.
//!
//! Coefficients sit on the left (`a·g`). Terms at an absorbing monoid element
//! are genuine terms: `R[M]` is the monoid ring, not the contracted one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{pow_sat, size_check, Error, Result};
use crate::monoid::{Monoid, MonoidElem, MonoidFragment};
use crate::ring::{Endomorphism, FiniteRing, Radix};
use crate::set::ElemSet;
use crate::RING_SIZE_CAP;

/// `Σ a_g g` with no zero coefficients stored; terms ordered by encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MonoidRingElement {
    terms: BTreeMap<MonoidElem, usize>,
}

impl MonoidRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(monoid element, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, usize)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &MonoidElem> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `g`, or `None` when `g` is outside the support.
    pub fn coefficient(&self, g: &MonoidElem) -> Option<usize> {
        self.terms.get(g).copied()
    }
}

/// Arithmetic context binding a coefficient ring and a monoid.
#[derive(Debug, Clone, Copy)]
pub struct MonoidRing<'a> {
    pub ring: &'a FiniteRing,
    pub monoid: &'a Monoid,
}

/// Twist data for `R[M, α]`: `(r·g)(s·h) = r·α^{deg g}(s)·(gh)`.
#[derive(Debug, Clone, Copy)]
pub struct SkewContext<'a> {
    pub endo: &'a Endomorphism,
}

impl<'a> SkewContext<'a> {
    /// Checks `deg e = 0` and additivity of the grading on all sampled pairs
    /// whose product is not the monoid zero.
    pub fn new(monoid: &Monoid, endo: &'a Endomorphism, sample: &MonoidFragment) -> Result<Self> {
        if monoid.grading(&monoid.identity()) != 0 {
            return Err(Error::Monoid("grading of the identity is nonzero".into()));
        }
        for g in sample.elements() {
            for h in sample.elements() {
                let gh = monoid.op(g, h);
                if gh != MonoidElem::Zero
                    && monoid.grading(&gh) != monoid.grading(g) + monoid.grading(h)
                {
                    return Err(Error::Monoid(format!(
                        "grading not additive at ({}, {})",
                        monoid.format_elem(g),
                        monoid.format_elem(h)
                    )));
                }
            }
        }
        Ok(SkewContext { endo })
    }
}

impl<'a> MonoidRing<'a> {
    pub fn new(ring: &'a FiniteRing, monoid: &'a Monoid) -> Self {
        MonoidRing { ring, monoid }
    }

    /// `c·g`.
    pub fn term(&self, c: usize, g: MonoidElem) -> Result<MonoidRingElement> {
        self.from_terms([(c, g)])
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (usize, MonoidElem)>,
    ) -> Result<MonoidRingElement> {
        let mut out = BTreeMap::new();
        for (c, g) in terms {
            if c >= self.ring.order() {
                return Err(Error::ElementOutOfRange {
                    index: c,
                    order: self.ring.order(),
                });
            }
            if !self.monoid.contains(&g) {
                return Err(Error::Monoid(format!(
                    "{g:?} is not an element of {}",
                    self.monoid.name()
                )));
            }
            self.accumulate(&mut out, g, c);
        }
        Ok(MonoidRingElement { terms: out })
    }

    fn accumulate(&self, terms: &mut BTreeMap<MonoidElem, usize>, g: MonoidElem, c: usize) {
        let zero = self.ring.zero();
        let entry = terms.entry(g);
        match entry {
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(*o.get(), c);
                if s == zero {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            alloc::collections::btree_map::Entry::Vacant(v) => {
                if c != zero {
                    v.insert(c);
                }
            }
        }
    }

    pub fn add(&self, x: &MonoidRingElement, y: &MonoidRingElement) -> MonoidRingElement {
        let mut out = x.terms.clone();
        for (g, &c) in &y.terms {
            self.accumulate(&mut out, g.clone(), c);
        }
        MonoidRingElement { terms: out }
    }

    pub fn neg(&self, x: &MonoidRingElement) -> MonoidRingElement {
        MonoidRingElement {
            terms: x
                .terms
                .iter()
                .map(|(g, &c)| (g.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, x: &MonoidRingElement, y: &MonoidRingElement) -> MonoidRingElement {
        self.add(x, &self.neg(y))
    }

    /// `c·x` with `c` multiplied on the left of every coefficient.
    pub fn scalar(&self, c: usize, x: &MonoidRingElement) -> MonoidRingElement {
        let mut out = BTreeMap::new();
        for (g, &a) in &x.terms {
            self.accumulate(&mut out, g.clone(), self.ring.mul(c, a));
        }
        MonoidRingElement { terms: out }
    }

    /// Convolution in `R[M]`.
    pub fn multiply(&self, x: &MonoidRingElement, y: &MonoidRingElement) -> MonoidRingElement {
        let mut out = BTreeMap::new();
        for (g, &a) in &x.terms {
            for (h, &b) in &y.terms {
                self.accumulate(&mut out, self.monoid.op(g, h), self.ring.mul(a, b));
            }
        }
        MonoidRingElement { terms: out }
    }

    /// Convolution in `R[M, α]`.
    pub fn skew_multiply(
        &self,
        ctx: &SkewContext<'_>,
        x: &MonoidRingElement,
        y: &MonoidRingElement,
    ) -> MonoidRingElement {
        let mut out = BTreeMap::new();
        for (g, &a) in &x.terms {
            let k = self.monoid.grading(g);
            for (h, &b) in &y.terms {
                let twisted = ctx.endo.apply_pow(k, b);
                self.accumulate(&mut out, self.monoid.op(g, h), self.ring.mul(a, twisted));
            }
        }
        MonoidRingElement { terms: out }
    }

    /// Every stored coefficient lies in `s`.
    pub fn coefficients_in(&self, x: &MonoidRingElement, s: &ElemSet) -> bool {
        x.terms.values().all(|&c| s.contains(c))
    }

    /// `"1*e + 3*g^2"`; the zero element prints as `"0"`.
    pub fn format(&self, x: &MonoidRingElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms
            .iter()
            .map(|(g, &c)| format!("{}*{}", self.ring.label(c), self.monoid.format_elem(g)))
            .collect();
        parts.join(" + ")
    }

    pub fn parse(&self, s: &str) -> Result<MonoidRingElement> {
        let s = s.trim();
        if s == "0" {
            return Ok(MonoidRingElement::zero());
        }
        let mut terms = Vec::new();
        for part in s.split('+') {
            let (c, g) = part
                .trim()
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("term {part:?} is not coef*monoid")))?;
            let c = self.ring.index_of(c.trim()).ok_or_else(|| {
                Error::Parse(format!("{c:?} is not an element of {}", self.ring.name()))
            })?;
            terms.push((c, self.monoid.parse_elem(g)?));
        }
        self.from_terms(terms)
    }
}

/// `R[M]` for a finite monoid as a table ring, with the coefficient-vector
/// bijection. Position `k` of a vector is the `k`-th element of
/// [`Monoid::elements`]; position 0 is the most significant digit.
#[derive(Debug, Clone)]
pub struct FiniteMonoidRing {
    pub ring: FiniteRing,
    positions: Vec<MonoidElem>,
    radix: Radix,
    base_zero: usize,
}

impl FiniteMonoidRing {
    pub fn positions(&self) -> &[MonoidElem] {
        &self.positions
    }

    pub fn encode(&self, x: &MonoidRingElement) -> usize {
        let digits: Vec<usize> = self
            .positions
            .iter()
            .map(|g| x.coefficient(g).unwrap_or(self.base_zero))
            .collect();
        self.radix.encode(&digits)
    }

    pub fn decode(&self, idx: usize) -> MonoidRingElement {
        let mut digits = vec![0; self.positions.len()];
        self.radix.decode(idx, &mut digits);
        MonoidRingElement {
            terms: self
                .positions
                .iter()
                .zip(digits)
                .filter(|&(_, c)| c != self.base_zero)
                .map(|(g, c)| (g.clone(), c))
                .collect(),
        }
    }

    /// Image of `S[M]` (all coefficients in `s`) under the bijection.
    pub fn coefficient_image(&self, s: &ElemSet) -> ElemSet {
        let mut digits = vec![0; self.positions.len()];
        ElemSet::from_iter(
            self.ring.order(),
            self.ring.elements().filter(|&i| {
                self.radix.decode(i, &mut digits);
                digits.iter().all(|&c| s.contains(c))
            }),
        )
    }
}

pub fn finite_monoid_ring(r: &FiniteRing, m: &Monoid) -> Result<FiniteMonoidRing> {
    build_finite(r, m, None)
}

/// `R[M, α]` for a finite graded monoid.
pub fn finite_skew_monoid_ring(
    r: &FiniteRing,
    m: &Monoid,
    endo: &Endomorphism,
) -> Result<FiniteMonoidRing> {
    build_finite(r, m, Some(endo))
}

fn build_finite(
    r: &FiniteRing,
    m: &Monoid,
    endo: Option<&Endomorphism>,
) -> Result<FiniteMonoidRing> {
    let (positions, table) = m.finite_table()?;
    let k = positions.len();
    size_check("monoid ring", pow_sat(r.order(), k), RING_SIZE_CAP as u128)?;
    let radix = Radix {
        sizes: vec![r.order(); k],
    };
    let n = radix.total() as usize;
    let grades: Vec<usize> = positions.iter().map(|g| m.grading(g)).collect();
    let twist: Vec<Vec<usize>> = match endo {
        Some(e) => e.powers(grades.iter().copied().max().unwrap_or(0) + 1),
        None => vec![(0..r.order()).collect()],
    };
    let digits: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut d = vec![0; k];
            radix.decode(i, &mut d);
            d
        })
        .collect();
    let zero_r = r.zero();
    let scratch = core::cell::RefCell::new(vec![zero_r; k]);
    let mul = |x: usize, y: usize| {
        let mut acc = scratch.borrow_mut();
        acc.iter_mut().for_each(|c| *c = zero_r);
        for (i, &a) in digits[x].iter().enumerate() {
            if a == zero_r {
                continue;
            }
            let tw = &twist[if endo.is_some() { grades[i] } else { 0 }];
            for (j, &b) in digits[y].iter().enumerate() {
                if b != zero_r {
                    let t = table[i * k + j];
                    acc[t] = r.add(acc[t], r.mul(a, tw[b]));
                }
            }
        }
        radix.encode(&acc)
    };
    let sum = core::cell::RefCell::new(vec![zero_r; k]);
    let add = |x: usize, y: usize| {
        let mut s = sum.borrow_mut();
        for (c, (&a, &b)) in s.iter_mut().zip(digits[x].iter().zip(&digits[y])) {
            *c = r.add(a, b);
        }
        radix.encode(&s)
    };
    let mr = MonoidRing::new(r, m);
    let to_element = |d: &[usize]| MonoidRingElement {
        terms: positions
            .iter()
            .zip(d)
            .filter(|&(_, &c)| c != zero_r)
            .map(|(g, &c)| (g.clone(), c))
            .collect(),
    };
    let labels: Vec<String> = digits.iter().map(|d| mr.format(&to_element(d))).collect();
    let zero = radix.encode(&vec![zero_r; k]);
    let mut one_digits = vec![zero_r; k];
    let e_pos = positions
        .iter()
        .position(|g| *g == m.identity())
        .expect("identity is an element");
    one_digits[e_pos] = r.one();
    let one = radix.encode(&one_digits);
    let name = match endo {
        None => format!("{}[{}]", r.name(), m.name()),
        Some(e) => format!("{}[{},{}]", r.name(), m.name(), e.name()),
    };
    let ring = FiniteRing::from_fn(name, n, add, mul, zero, one, labels)?;
    Ok(FiniteMonoidRing {
        ring,
        positions,
        radix,
        base_zero: zero_r,
    })
}

/// Every element of `R[M]` supported in the fragment, exactly once, in
/// mixed-radix order over the fragment positions.
#[derive(Debug, Clone)]
pub struct ElementEnumerator<'a> {
    fragment: &'a MonoidFragment,
    radix: Radix,
    zero: usize,
    next: usize,
    total: usize,
}

impl Iterator for ElementEnumerator<'_> {
    type Item = MonoidRingElement;

    fn next(&mut self) -> Option<MonoidRingElement> {
        if self.next >= self.total {
            return None;
        }
        let mut digits = vec![0; self.fragment.len()];
        self.radix.decode(self.next, &mut digits);
        self.next += 1;
        Some(MonoidRingElement {
            terms: self
                .fragment
                .elements()
                .iter()
                .zip(digits)
                .filter(|&(_, c)| c != self.zero)
                .map(|(g, c)| (g.clone(), c))
                .collect(),
        })
    }
}

pub fn enumerate_elements<'a>(
    r: &FiniteRing,
    fragment: &'a MonoidFragment,
    budget: u64,
) -> Result<ElementEnumerator<'a>> {
    let total = pow_sat(r.order(), fragment.len());
    if total > budget as u128 {
        return Err(Error::Budget {
            what: format!("enumerating {} elements", total),
            spent: budget,
        });
    }
    Ok(ElementEnumerator {
        fragment,
        radix: Radix {
            sizes: vec![r.order(); fragment.len()],
        },
        zero: r.zero(),
        next: 0,
        total: total as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;
    use crate::monoid::{cyclic_group, free_commutative, make_lz2, make_matrix_unit_monoid};
    use crate::radical::{lower_nilradical_msequence, nilpotents};
    use crate::ring::{check_ring_axioms, direct_product, make_zmod, swap_endomorphism};

    #[test]
    fn basic_arithmetic() {
        let z2 = make_zmod(2).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let mr = MonoidRing::new(&z2, &c2);
        let x = mr.parse("1*e + 1*g").unwrap();
        assert_eq!(x.len(), 2);
        assert!(mr.add(&x, &mr.neg(&x)).is_zero());
        assert!(mr.multiply(&x, &x).is_zero());

        let z4 = make_zmod(4).unwrap();
        let nat = free_commutative(1).unwrap();
        let mr = MonoidRing::new(&z4, &nat);
        let e = mr.parse("1*e").unwrap();
        assert_eq!(mr.format(&mr.scalar(2, &e)), "2*e");
        let g = mr.parse("1*g").unwrap();
        assert_eq!(mr.format(&mr.multiply(&g, &g)), "1*g^2");
        assert_eq!(mr.format(&MonoidRingElement::zero()), "0");
    }

    #[test]
    fn matrix_unit_product_cancels_at_zero() {
        let z2 = make_zmod(2).unwrap();
        let mu = make_matrix_unit_monoid();
        let mr = MonoidRing::new(&z2, &mu);
        let a = mr.parse("1*E22").unwrap();
        let b = mr.parse("1*E11 + 1*E12").unwrap();
        assert!(mr.multiply(&a, &b).is_zero());
    }

    #[test]
    fn coefficient_membership() {
        let z12 = make_zmod(12).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let mr = MonoidRing::new(&z12, &c2);
        let s = ElemSet::from_iter(12, [0, 6]);
        assert!(mr.coefficients_in(&MonoidRingElement::zero(), &s));
        assert!(!mr.coefficients_in(&mr.parse("6*e + 1*g").unwrap(), &s));
        assert!(mr.coefficients_in(&mr.parse("6*e + 6*g").unwrap(), &s));
    }

    #[test]
    fn skew_twist() {
        let z2 = make_zmod(2).unwrap();
        let r = direct_product(&[&z2, &z2]).unwrap();
        let sigma = swap_endomorphism(&r, 2).unwrap();
        let w = crate::monoid::free_word(1, None).unwrap();
        let frag = w.fragment(3).unwrap();
        let ctx = SkewContext::new(&w, &sigma, &frag).unwrap();
        let mr = MonoidRing::new(&r, &w);
        let x = mr.parse("(1,1)*a").unwrap();
        let y = mr.parse("(1,0)*e").unwrap();
        assert_eq!(mr.format(&mr.skew_multiply(&ctx, &x, &y)), "(0,1)*a");
        let id = Endomorphism::identity(&r);
        let ctx_id = SkewContext::new(&w, &id, &frag).unwrap();
        assert_eq!(mr.skew_multiply(&ctx_id, &x, &y), mr.multiply(&x, &y));
    }

    #[test]
    fn finite_rings() {
        let z2 = make_zmod(2).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let gr = finite_monoid_ring(&z2, &c2).unwrap();
        assert_eq!(gr.ring.order(), 4);
        assert!(check_ring_axioms(&gr.ring).is_empty());
        let eg = gr.ring.index_of("1*e + 1*g").unwrap();
        assert_eq!(
            nilpotents(&gr.ring),
            ElemSet::from_iter(4, [gr.ring.zero(), eg])
        );
        assert_eq!(lower_nilradical_msequence(&gr.ring), nilpotents(&gr.ring));

        let lz = make_lz2();
        let lr = finite_monoid_ring(&z2, &lz).unwrap();
        let z2z2 = direct_product(&[&z2, &z2]).unwrap();
        assert!(find_isomorphism(&lr.ring, &z2z2).unwrap().is_some());
        assert_eq!(nilpotents(&lr.ring).len(), 1);

        let mu = finite_monoid_ring(&z2, &make_matrix_unit_monoid()).unwrap();
        assert_eq!(mu.ring.order(), 64);
        assert!(check_ring_axioms(&mu.ring).is_empty());

        for i in gr.ring.elements() {
            assert_eq!(gr.encode(&gr.decode(i)), i);
        }
    }

    #[test]
    fn enumeration_counts() {
        let z2 = make_zmod(2).unwrap();
        let z4 = make_zmod(4).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let triv = crate::monoid::trivial_monoid();
        let f1 = triv.fragment(0).unwrap();
        assert_eq!(enumerate_elements(&z2, &f1, 1000).unwrap().count(), 2);
        let f2 = c2.fragment(0).unwrap();
        assert_eq!(enumerate_elements(&z2, &f2, 1000).unwrap().count(), 4);
        let nat = free_commutative(1).unwrap();
        let f3 = nat.fragment(2).unwrap();
        let all: Vec<_> = enumerate_elements(&z4, &f3, 1000).unwrap().collect();
        assert_eq!(all.len(), 64);
        let distinct: alloc::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 64);
        assert!(enumerate_elements(&z4, &f3, 10).is_err());
    }
}
