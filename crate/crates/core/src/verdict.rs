//! Bounded exhaustive deciders for the Armendariz-type conditions relative to
//! a monoid.
//!
//! A pair `(α, β)` with support in the fragment violates variant `V` with
//! target set `T` when every coefficient of `αβ` lies in `T` but some
//! `a_i b_j ∉ T`. Pairs are scanned with `α` outer and `β` inner, both in
//! mixed-radix order of their coefficient vectors over the fragment (first
//! fragment position most significant). Budgets bound the canonical position
//! `α·S + β + 1` reached, so outcomes do not depend on how the scan is split.
//!
//! When `T` is an ideal the condition on `R` is the `{0}` condition on `R/T`,
//! which splits over the blocks of `R/T`. Large instances run a short direct
//! prepass and then scan the blocks; block witnesses are lifted back to `R`
//! through least coset representatives and re-verified there.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{pow_sat, Error, Result};
use crate::ideal::{central_idempotent_blocks, quotient, Ideal};
use crate::monoid::{Monoid, MonoidElem, MonoidFragment};
use crate::monoid_ring::{finite_monoid_ring, MonoidRing, MonoidRingElement};
use crate::radical::{
    is_nilpotent_pp, lower_nilradical_msequence, nilpotents, semicommutative_witness,
    upper_nilradical,
};
use crate::ring::{FiniteRing, Radix};
use crate::set::ElemSet;

/// Default limit on the canonical pair position reached by one scan.
pub const DEFAULT_PAIR_BUDGET: u128 = 50_000_000;

/// Length of the direct prepass before a block reduction.
pub const DIRECT_PREPASS: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Target `{0}`.
    Armendariz,
    /// Target `N(R)`.
    Nil,
    /// Target `N_*(R)`.
    LowerNil,
    /// Target `N^*(R)`.
    UpperNil,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Armendariz,
        Variant::Nil,
        Variant::LowerNil,
        Variant::UpperNil,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Armendariz => "armendariz",
            Variant::Nil => "nil",
            Variant::LowerNil => "lower-nil",
            Variant::UpperNil => "upper-nil",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == s)
    }

    /// The target (and conclusion) set of this variant over `r`.
    pub fn target(self, r: &FiniteRing) -> Result<ElemSet> {
        Ok(match self {
            Variant::Armendariz => ElemSet::from_iter(r.order(), [r.zero()]),
            Variant::Nil => nilpotents(r),
            Variant::LowerNil => lower_nilradical_msequence(r),
            Variant::UpperNil => upper_nilradical(r)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    HoldsUpToBounds,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Direct scan when it fits the budget, otherwise prepass plus blocks.
    Auto,
    Direct,
    /// Blocks of `R/T` only (requires `T` to be an ideal).
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub budget: u128,
    pub strategy: Strategy,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            budget: DEFAULT_PAIR_BUDGET,
            strategy: Strategy::Auto,
        }
    }
}

/// `α`, `β` and the first offending term pair `(a·g, b·h)` in term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub alpha: MonoidRingElement,
    pub beta: MonoidRingElement,
    pub g: MonoidElem,
    pub h: MonoidElem,
    pub a: usize,
    pub b: usize,
    pub product: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub ring: String,
    pub ring_order: usize,
    pub fragment: String,
    pub fragment_size: usize,
    /// `|R|^(2·|fragment|)`, saturating.
    pub pairs: u128,
    pub strategy: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub variant: Variant,
    pub bounds: Bounds,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn fails(&self) -> bool {
        self.outcome == Outcome::Fails
    }
}

/// A pure table problem: the `{target, conclusion}` condition over `ring`
/// with `k` fragment positions whose pairwise products land in `slots`.
#[derive(Debug, Clone)]
pub struct ScanProblem {
    ring: FiniteRing,
    in_target: Vec<bool>,
    in_conclusion: Vec<bool>,
    k: usize,
    slot: Vec<usize>,
    slot_count: usize,
    space: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawWitness {
    pub alpha: u64,
    pub beta: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOutcome {
    pub witness: Option<RawWitness>,
    /// The scan stopped at the position limit before covering its range.
    pub reached_limit: bool,
}

impl ScanOutcome {
    /// Merges outcomes of consecutive `α` ranges, earliest first.
    pub fn merge(parts: impl IntoIterator<Item = ScanOutcome>) -> ScanOutcome {
        let mut reached = false;
        for p in parts {
            if p.witness.is_some() {
                return p;
            }
            reached |= p.reached_limit;
        }
        ScanOutcome {
            witness: None,
            reached_limit: reached,
        }
    }
}

impl ScanProblem {
    fn new(
        ring: FiniteRing,
        target: &ElemSet,
        conclusion: &ElemSet,
        monoid: &Monoid,
        fragment: &MonoidFragment,
    ) -> Result<Self> {
        let k = fragment.len();
        let space = pow_sat(ring.order(), k);
        if space > u64::MAX as u128 / 2 {
            return Err(Error::Budget {
                what: format!("{} coefficient vectors", space),
                spent: 0,
            });
        }
        let mut products: Vec<MonoidElem> = Vec::new();
        let mut slot = Vec::with_capacity(k * k);
        for g in fragment.elements() {
            for h in fragment.elements() {
                let p = monoid.op(g, h);
                let s = match products.iter().position(|q| *q == p) {
                    Some(s) => s,
                    None => {
                        products.push(p);
                        products.len() - 1
                    }
                };
                slot.push(s);
            }
        }
        Ok(ScanProblem {
            in_target: target.mask(),
            in_conclusion: conclusion.mask(),
            k,
            slot,
            slot_count: products.len(),
            space: space as u64,
            ring,
        })
    }

    /// Number of coefficient vectors, `|R|^k`.
    pub fn space(&self) -> u64 {
        self.space
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Coefficient vector of index `x`.
    pub fn decode(&self, x: u64) -> Vec<usize> {
        let n = self.ring.order() as u64;
        let mut d = vec![0; self.k];
        let mut x = x;
        for i in (0..self.k).rev() {
            d[i] = (x % n) as usize;
            x /= n;
        }
        d
    }

    /// First violating pair with `α ∈ alphas`, stopping once the canonical
    /// position exceeds `limit`.
    pub fn scan(&self, alphas: Range<u64>, limit: u128) -> ScanOutcome {
        let r = &self.ring;
        let n = r.order();
        let zero = r.zero();
        let k = self.k;
        let space = self.space as u128;
        let mut acc = vec![zero; self.slot_count];
        let mut touched: Vec<usize> = Vec::with_capacity(self.slot_count);
        let mut bad_value = vec![false; n];
        for alpha in alphas {
            let row_start = alpha as u128 * space;
            if row_start >= limit {
                return ScanOutcome {
                    witness: None,
                    reached_limit: true,
                };
            }
            let a = self.decode(alpha);
            let nz_a: Vec<(usize, usize)> = a
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, c)| c != zero)
                .collect();
            if nz_a.is_empty() {
                continue;
            }
            // b is a culprit value when some a_i·b leaves the conclusion set
            let mut any_bad = false;
            for (v, bad) in bad_value.iter_mut().enumerate().take(n) {
                *bad = nz_a
                    .iter()
                    .any(|&(_, ai)| !self.in_conclusion[r.mul(ai, v)]);
                any_bad |= *bad;
            }
            let row_limit = (limit - row_start).min(space) as u64;
            if !any_bad {
                if row_limit < self.space {
                    return ScanOutcome {
                        witness: None,
                        reached_limit: true,
                    };
                }
                continue;
            }
            let mut b = vec![zero; k];
            if zero != 0 {
                // odometer below assumes digit 0 is the first value
                b.iter_mut().for_each(|x| *x = 0);
            }
            for beta in 0..row_limit {
                if beta > 0 {
                    let mut pos = k;
                    while pos > 0 {
                        pos -= 1;
                        b[pos] += 1;
                        if b[pos] < n {
                            break;
                        }
                        b[pos] = 0;
                    }
                }
                if !b.iter().any(|&v| v != zero && bad_value[v]) {
                    continue;
                }
                touched.clear();
                for &(i, ai) in &nz_a {
                    for (j, &bj) in b.iter().enumerate() {
                        if bj == zero {
                            continue;
                        }
                        let s = self.slot[i * k + j];
                        if acc[s] == zero && !touched.contains(&s) {
                            touched.push(s);
                        }
                        acc[s] = r.add(acc[s], r.mul(ai, bj));
                    }
                }
                let mut in_t = true;
                for &s in &touched {
                    in_t &= self.in_target[acc[s]];
                    acc[s] = zero;
                }
                if in_t {
                    return ScanOutcome {
                        witness: Some(RawWitness { alpha, beta }),
                        reached_limit: false,
                    };
                }
            }
            if row_limit < self.space {
                return ScanOutcome {
                    witness: None,
                    reached_limit: true,
                };
            }
        }
        ScanOutcome {
            witness: None,
            reached_limit: false,
        }
    }
}

#[derive(Debug, Clone)]
enum StageKind {
    /// A prepass may stop at its limit without deciding.
    Direct { prepass: bool },
    /// `lift[x]` is the element of `R` representing block element `x`.
    Block { lift: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct Stage {
    pub problem: ScanProblem,
    pub limit: u128,
    kind: StageKind,
}

/// A prepared check: scans in order; the first witness wins.
#[derive(Debug, Clone)]
pub struct Plan<'a> {
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
    fragment: &'a MonoidFragment,
    variant: Variant,
    target: ElemSet,
    strategy: &'static str,
    pub stages: Vec<Stage>,
}

pub fn plan_check<'a>(
    r: &'a FiniteRing,
    monoid: &'a Monoid,
    fragment: &'a MonoidFragment,
    variant: Variant,
    config: &CheckConfig,
) -> Result<Plan<'a>> {
    let target = variant.target(r)?;
    let direct_pairs = pow_sat(r.order(), 2 * fragment.len());
    let is_ideal = Ideal::new(r, target.clone()).is_ok();
    let use_blocks = match config.strategy {
        Strategy::Direct => false,
        Strategy::Reduced if !is_ideal => {
            return Err(Error::NotAnIdeal(format!(
                "{} target of {}",
                variant.name(),
                r.name()
            )));
        }
        Strategy::Reduced => true,
        Strategy::Auto => is_ideal && direct_pairs > config.budget,
    };
    let mut stages = Vec::new();
    let strategy = if use_blocks { "blocks" } else { "direct" };
    if !use_blocks || config.strategy == Strategy::Auto {
        if let Ok(problem) = ScanProblem::new(r.clone(), &target, &target, monoid, fragment) {
            let prepass = use_blocks;
            let limit = if prepass {
                DIRECT_PREPASS.min(config.budget)
            } else {
                config.budget
            };
            stages.push(Stage {
                problem,
                limit,
                kind: StageKind::Direct { prepass },
            });
        } else if !use_blocks {
            return Err(Error::Budget {
                what: format!("{} pairs", direct_pairs),
                spent: 0,
            });
        }
    }
    if use_blocks {
        let q = quotient(r, &target)?;
        for block in central_idempotent_blocks(&q.ring)? {
            let lift: Vec<usize> = block
                .incl
                .iter()
                .map(|&c| {
                    if c == q.ring.zero() {
                        r.zero()
                    } else {
                        q.representative[c]
                    }
                })
                .collect();
            let zero = ElemSet::from_iter(block.ring.order(), [block.ring.zero()]);
            let problem = ScanProblem::new(block.ring, &zero, &zero, monoid, fragment)?;
            stages.push(Stage {
                problem,
                limit: config.budget,
                kind: StageKind::Block { lift },
            });
        }
    }
    Ok(Plan {
        ring: r,
        monoid,
        fragment,
        variant,
        target,
        strategy,
        stages,
    })
}

impl Plan<'_> {
    pub fn bounds(&self) -> Bounds {
        Bounds {
            ring: self.ring.name().into(),
            ring_order: self.ring.order(),
            fragment: self.fragment.descriptor(),
            fragment_size: self.fragment.len(),
            pairs: pow_sat(self.ring.order(), 2 * self.fragment.len()),
            strategy: self.strategy,
        }
    }

    /// Runs the stages with `scan(problem, limit)`, which must behave like
    /// `problem.scan(0..problem.space(), limit)`.
    pub fn execute(&self, scan: &dyn Fn(&ScanProblem, u128) -> ScanOutcome) -> Result<Verdict> {
        for stage in &self.stages {
            let out = scan(&stage.problem, stage.limit);
            if let Some(raw) = out.witness {
                let lift = |x: u64| -> Vec<usize> {
                    let d = stage.problem.decode(x);
                    match &stage.kind {
                        StageKind::Direct { .. } => d,
                        StageKind::Block { lift } => d.iter().map(|&c| lift[c]).collect(),
                    }
                };
                let alpha = self.element(&lift(raw.alpha))?;
                let beta = self.element(&lift(raw.beta))?;
                let witness = verify_violation(self.ring, self.monoid, &self.target, &alpha, &beta)
                    .ok_or_else(|| {
                        Error::Invalid(format!(
                            "lifted pair fails re-verification in {}",
                            self.ring.name()
                        ))
                    })?;
                return Ok(Verdict {
                    variant: self.variant,
                    bounds: self.bounds(),
                    outcome: Outcome::Fails,
                    witness: Some(witness),
                });
            }
            if out.reached_limit {
                match stage.kind {
                    StageKind::Direct { prepass: true } => continue,
                    _ => {
                        return Err(Error::Budget {
                            what: format!(
                                "{} check of {} over {}",
                                self.variant.name(),
                                self.ring.name(),
                                self.fragment.descriptor()
                            ),
                            spent: stage.limit.min(u64::MAX as u128) as u64,
                        })
                    }
                }
            }
            if let StageKind::Direct { prepass: true } = stage.kind {
                // the prepass covered the whole space
                break;
            }
        }
        Ok(Verdict {
            variant: self.variant,
            bounds: self.bounds(),
            outcome: Outcome::HoldsUpToBounds,
            witness: None,
        })
    }

    fn element(&self, coeffs: &[usize]) -> Result<MonoidRingElement> {
        MonoidRing::new(self.ring, self.monoid).from_terms(
            coeffs
                .iter()
                .copied()
                .zip(self.fragment.elements().iter().cloned()),
        )
    }
}

/// Re-evaluates `(α, β)` directly: `Some` when every coefficient of `αβ` is
/// in `target` and some `a·b` is not, with the first such term pair.
pub fn verify_violation(
    r: &FiniteRing,
    monoid: &Monoid,
    target: &ElemSet,
    alpha: &MonoidRingElement,
    beta: &MonoidRingElement,
) -> Option<Witness> {
    let mr = MonoidRing::new(r, monoid);
    if !mr.coefficients_in(&mr.multiply(alpha, beta), target) {
        return None;
    }
    for (g, a) in alpha.terms() {
        for (h, b) in beta.terms() {
            let p = r.mul(a, b);
            if !target.contains(p) {
                return Some(Witness {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    g: g.clone(),
                    h: h.clone(),
                    a,
                    b,
                    product: p,
                });
            }
        }
    }
    None
}

pub fn check_armendariz(
    r: &FiniteRing,
    monoid: &Monoid,
    fragment: &MonoidFragment,
    variant: Variant,
) -> Result<Verdict> {
    check_armendariz_with(r, monoid, fragment, variant, &CheckConfig::default())
}

pub fn check_armendariz_with(
    r: &FiniteRing,
    monoid: &Monoid,
    fragment: &MonoidFragment,
    variant: Variant,
    config: &CheckConfig,
) -> Result<Verdict> {
    plan_check(r, monoid, fragment, variant, config)?
        .execute(&|p, limit| p.scan(0..p.space(), limit))
}

/// Outcome of the fixed `M_2(R)` counterexample over `ℕ`.
#[derive(Debug, Clone)]
pub struct M2Report {
    /// Labels of `M_2(R)`, indexed like the witness coefficients.
    pub labels: Vec<String>,
    pub verdict: Verdict,
    pub product_zero: bool,
    /// `AC`, `AD + BC`, `BD` for `α = A e + B g`, `β = C e + D g`.
    pub partials_zero: [bool; 3],
    pub idempotent: bool,
    pub outside_lower: bool,
}

impl M2Report {
    pub fn ring_label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn passes(&self) -> bool {
        self.product_zero
            && self.partials_zero.iter().all(|&z| z)
            && self.idempotent
            && self.outside_lower
    }
}

/// `α = E12·e − E11·g`, `β = (E11 + E12)·e + (E21 + E22)·g` over `M_2(R)`;
/// the designated product `E12·(E21 + E22) = E11 + E12` is idempotent.
pub fn check_m2_counterexample(r: &FiniteRing) -> Result<M2Report> {
    let m2 = crate::construct::full_matrix(r, 2)?;
    let (o, z) = (r.one(), r.zero());
    let mat = |e: [usize; 4]| m2.from_entries(&e);
    let a = mat([z, o, z, z])?;
    let b = m2.ring.neg(mat([o, z, z, z])?);
    let c = mat([o, o, z, z])?;
    let d = mat([z, z, o, o])?;
    let nat = crate::monoid::free_commutative(1)?;
    let e = nat.identity();
    let g = MonoidElem::Vector(vec![1]);
    let mr = MonoidRing::new(&m2.ring, &nat);
    let alpha = mr.from_terms([(a, e.clone()), (b, g.clone())])?;
    let beta = mr.from_terms([(c, e.clone()), (d, g.clone())])?;
    let ring = &m2.ring;
    let zero = ring.zero();
    let partials_zero = [
        ring.mul(a, c) == zero,
        ring.add(ring.mul(a, d), ring.mul(b, c)) == zero,
        ring.mul(b, d) == zero,
    ];
    let product_zero = mr.multiply(&alpha, &beta).is_zero();
    let p = ring.mul(a, d);
    let lower = lower_nilradical_msequence(ring);
    let witness = Witness {
        alpha,
        beta,
        g: e,
        h: g,
        a,
        b: d,
        product: p,
    };
    let frag =
        MonoidFragment::from_elements(&nat, vec![nat.identity(), MonoidElem::Vector(vec![1])])?;
    let verdict = Verdict {
        variant: Variant::LowerNil,
        bounds: Bounds {
            ring: ring.name().into(),
            ring_order: ring.order(),
            fragment: frag.descriptor(),
            fragment_size: 2,
            pairs: pow_sat(ring.order(), 4),
            strategy: "fixed",
        },
        outcome: if product_zero && !lower.contains(p) {
            Outcome::Fails
        } else {
            Outcome::HoldsUpToBounds
        },
        witness: Some(witness),
    };
    Ok(M2Report {
        labels: ring.labels().to_vec(),
        verdict,
        product_zero,
        partials_zero,
        idempotent: ring.mul(p, p) == p && p != zero,
        outside_lower: !lower.contains(p),
    })
}

/// Re-verifies a failure witness over a submonoid inside the ambient monoid
/// `m` after mapping its support with `embed`.
pub fn witness_transport_submonoid(
    r: &FiniteRing,
    variant: Variant,
    witness: &Witness,
    m: &Monoid,
    embed: &dyn Fn(&MonoidElem) -> MonoidElem,
) -> Result<Verdict> {
    let mr = MonoidRing::new(r, m);
    let map = |x: &MonoidRingElement| mr.from_terms(x.terms().map(|(g, c)| (c, embed(g))));
    let alpha = map(&witness.alpha)?;
    let beta = map(&witness.beta)?;
    if alpha.len() != witness.alpha.len() || beta.len() != witness.beta.len() {
        return Err(Error::Monoid(
            "embedding is not injective on the witness support".into(),
        ));
    }
    let target = variant.target(r)?;
    let w = verify_violation(r, m, &target, &alpha, &beta).ok_or_else(|| {
        Error::Invalid("transported pair no longer violates the condition".into())
    })?;
    let support: Vec<MonoidElem> = {
        let mut s: Vec<MonoidElem> = alpha.support().chain(beta.support()).cloned().collect();
        s.push(m.identity());
        s.sort();
        s.dedup();
        s
    };
    Ok(Verdict {
        variant,
        bounds: Bounds {
            ring: r.name().into(),
            ring_order: r.order(),
            fragment: format!("{} witness support", m.name()),
            fragment_size: support.len(),
            pairs: 1,
            strategy: "transport",
        },
        outcome: Outcome::Fails,
        witness: Some(w),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Implication {
    /// Hypotheses and conclusion hold.
    Confirmed,
    /// Some hypothesis fails.
    Vacuous,
    /// Hypotheses hold, conclusion fails.
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentPpReport {
    pub semicommutative: bool,
    pub lower_nil: bool,
    pub base_nilpotent_pp: bool,
    pub monoid_ring_nilpotent_pp: bool,
    pub status: Implication,
}

/// Nilpotent p.p. lifting from `R` to `R[M]` for a finite monoid, with the
/// semicommutative and lower-nil hypotheses evaluated on the whole of `M`.
pub fn check_nilpotent_pp_monoid_ring(r: &FiniteRing, m: &Monoid) -> Result<NilpotentPpReport> {
    let rm = finite_monoid_ring(r, m)?;
    let frag = m.fragment(0)?;
    let semicommutative = semicommutative_witness(r).is_none();
    let lower_nil = !check_armendariz(r, m, &frag, Variant::LowerNil)?.fails();
    let base_nilpotent_pp = is_nilpotent_pp(r).is_ok();
    let monoid_ring_nilpotent_pp = is_nilpotent_pp(&rm.ring).is_ok();
    let status = match (
        semicommutative && lower_nil && base_nilpotent_pp,
        monoid_ring_nilpotent_pp,
    ) {
        (false, _) => Implication::Vacuous,
        (true, true) => Implication::Confirmed,
        (true, false) => Implication::Refuted,
    };
    Ok(NilpotentPpReport {
        semicommutative,
        lower_nil,
        base_nilpotent_pp,
        monoid_ring_nilpotent_pp,
        status,
    })
}

/// Canonical witness of the finite-order lemma: `α = Σ_{i<n} gⁱ`, `β = e − g`.
pub fn finite_order_witness(
    r: &FiniteRing,
    m: &Monoid,
    g: &MonoidElem,
    n: usize,
) -> Result<(MonoidRingElement, MonoidRingElement)> {
    let mr = MonoidRing::new(r, m);
    let alpha = mr.from_terms((0..n).map(|i| (r.one(), m.pow(g, i))))?;
    let beta = mr.from_terms([(r.one(), m.identity()), (r.neg(r.one()), g.clone())])?;
    Ok((alpha, beta))
}

/// Mixed-radix codec for coefficient vectors over a fragment, exposed for
/// callers that shard `α` ranges.
pub fn coefficient_radix(r: &FiniteRing, fragment: &MonoidFragment) -> Radix {
    Radix {
        sizes: vec![r.order(); fragment.len()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{
        cyclic_group, free_commutative, make_lz2, make_matrix_unit_monoid, product_monoid,
        trivial_monoid,
    };
    use crate::ring::make_zmod;

    #[test]
    fn matrix_units_fail() {
        let z2 = make_zmod(2).unwrap();
        let mu = make_matrix_unit_monoid();
        let frag = mu.fragment(0).unwrap();
        let v = check_armendariz(&z2, &mu, &frag, Variant::LowerNil).unwrap();
        assert!(v.fails());
        let w = v.witness.unwrap();
        assert_eq!(w.product, 1);
        let mr = MonoidRing::new(&z2, &mu);
        assert!(mr.multiply(&w.alpha, &w.beta).is_zero());
    }

    #[test]
    fn cyclic_fails_nat_holds() {
        let z2 = make_zmod(2).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let v = check_armendariz(&z2, &c2, &c2.fragment(0).unwrap(), Variant::LowerNil).unwrap();
        let w = v.witness.unwrap();
        let mr = MonoidRing::new(&z2, &c2);
        assert_eq!(mr.format(&w.alpha), "1*e + 1*g");
        assert_eq!(mr.format(&w.beta), "1*e + 1*g");

        let z4 = make_zmod(4).unwrap();
        let nat = free_commutative(1).unwrap();
        let v = check_armendariz(&z4, &nat, &nat.fragment(2).unwrap(), Variant::LowerNil).unwrap();
        assert_eq!(v.outcome, Outcome::HoldsUpToBounds);
    }

    #[test]
    fn strategies_agree() {
        let z4 = make_zmod(4).unwrap();
        let z12 = make_zmod(12).unwrap();
        let nat = free_commutative(1).unwrap();
        let c2 = cyclic_group(2).unwrap();
        let lz = make_lz2();
        for r in [&z4, &z12] {
            for m in [&nat, &c2, &lz] {
                let f = m.fragment(1).unwrap();
                for v in [Variant::Armendariz, Variant::LowerNil, Variant::Nil] {
                    let d = check_armendariz_with(
                        r,
                        m,
                        &f,
                        v,
                        &CheckConfig {
                            budget: u128::MAX,
                            strategy: Strategy::Direct,
                        },
                    )
                    .unwrap();
                    let b = check_armendariz_with(
                        r,
                        m,
                        &f,
                        v,
                        &CheckConfig {
                            budget: u128::MAX,
                            strategy: Strategy::Reduced,
                        },
                    )
                    .unwrap();
                    assert_eq!(
                        d.outcome,
                        b.outcome,
                        "{} {} {}",
                        r.name(),
                        m.name(),
                        v.name()
                    );
                }
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        let z4 = make_zmod(4).unwrap();
        let nat = free_commutative(1).unwrap();
        let f = nat.fragment(3).unwrap();
        let cfg = CheckConfig {
            budget: 1000,
            strategy: Strategy::Direct,
        };
        assert!(matches!(
            check_armendariz_with(&z4, &nat, &f, Variant::Nil, &cfg),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn sharded_scan_matches() {
        let z2 = make_zmod(2).unwrap();
        let mu = make_matrix_unit_monoid();
        let frag = mu.fragment(0).unwrap();
        let plan = plan_check(
            &z2,
            &mu,
            &frag,
            Variant::Armendariz,
            &CheckConfig::default(),
        )
        .unwrap();
        let p = &plan.stages[0].problem;
        let whole = p.scan(0..p.space(), u128::MAX);
        let parts = (0..8).map(|i| p.scan(i * 8..(i + 1) * 8, u128::MAX));
        assert_eq!(ScanOutcome::merge(parts), whole);
    }

    #[test]
    fn m2_example() {
        for n in [2, 4] {
            let r = make_zmod(n).unwrap();
            let rep = check_m2_counterexample(&r).unwrap();
            assert!(rep.passes(), "{rep:?}");
        }
    }

    #[test]
    fn transport() {
        let z2 = make_zmod(2).unwrap();
        let lz = make_lz2();
        let mr = MonoidRing::new(&z2, &lz);
        let alpha = mr.parse("1*z").unwrap();
        let beta = mr.parse("1*e + 1*z").unwrap();
        let target = Variant::LowerNil.target(&z2).unwrap();
        let w = verify_violation(&z2, &lz, &target, &alpha, &beta).unwrap();
        let nat = free_commutative(1).unwrap();
        let big = product_monoid(&lz, &nat);
        let e_nat = nat.identity();
        let v = witness_transport_submonoid(&z2, Variant::LowerNil, &w, &big, &|g| {
            MonoidElem::Tuple(vec![g.clone(), e_nat.clone()])
        })
        .unwrap();
        assert!(v.fails());
    }

    #[test]
    fn nilpotent_pp_implication() {
        let z2 = make_zmod(2).unwrap();
        let t = check_nilpotent_pp_monoid_ring(&z2, &trivial_monoid()).unwrap();
        assert_eq!(t.status, Implication::Confirmed);
        assert_eq!(
            check_nilpotent_pp_monoid_ring(&z2, &cyclic_group(2).unwrap())
                .unwrap()
                .status,
            Implication::Vacuous
        );
        assert_eq!(
            check_nilpotent_pp_monoid_ring(&z2, &make_lz2())
                .unwrap()
                .status,
            Implication::Vacuous
        );
    }
}
