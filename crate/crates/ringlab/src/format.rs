//! JSON documents: ring tables, verdicts and radical profiles.
//!
//! Ring files store both tables and the labels, so a write/read round trip
//! reproduces the ring exactly (same indices, same tables, same labels).

use serde::{Deserialize, Serialize};

use ringlab_core::monoid_ring::MonoidRing;
use ringlab_core::verdict::{Outcome, Verdict};
use ringlab_core::{ElemSet, FiniteRing, Monoid, RadicalProfile};

use crate::catalog::RingEntry;
use crate::error::{LabError, LabResult};

pub const RING_FORMAT: &str = "ringlab-ring/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub format: String,
    pub name: String,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl RingFile {
    pub fn from_ring(r: &FiniteRing) -> RingFile {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            r.elements()
                .map(|a| r.elements().map(|b| f(a, b)).collect())
                .collect()
        };
        RingFile {
            format: RING_FORMAT.into(),
            name: r.name().into(),
            order: r.order(),
            zero: r.zero(),
            one: r.one(),
            labels: r.labels().to_vec(),
            add: table(&|a, b| r.add(a, b)),
            mul: table(&|a, b| r.mul(a, b)),
        }
    }

    /// Rebuilds the ring; the axioms are checked, not assumed.
    pub fn to_ring(&self) -> LabResult<FiniteRing> {
        if self.format != RING_FORMAT {
            return Err(LabError::usage(format!(
                "unsupported ring format `{}`",
                self.format
            )));
        }
        if self.add.len() != self.order {
            return Err(LabError::usage(format!(
                "order {} disagrees with {} table rows",
                self.order,
                self.add.len()
            )));
        }
        let r = FiniteRing::from_tables(
            self.name.clone(),
            self.add.clone(),
            self.mul.clone(),
            self.zero,
            self.one,
            self.labels.clone(),
        )?;
        if let Some(v) = ringlab_core::ring::check_ring_axioms(&r).first() {
            return Err(LabError::usage(format!("ring file violates {:?}", v)));
        }
        Ok(r)
    }

    pub fn to_json(&self) -> LabResult<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> LabResult<RingFile> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub monoid: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub alpha: String,
    pub beta: String,
    pub alpha_terms: Vec<TermJson>,
    pub beta_terms: Vec<TermJson>,
    pub g: String,
    pub h: String,
    pub a: String,
    pub b: String,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub ring: String,
    pub ring_order: usize,
    pub monoid: String,
    pub fragment: String,
    pub fragment_size: usize,
    pub pairs: u128,
    pub strategy: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub property: String,
    pub bounds: BoundsJson,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

pub fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::HoldsUpToBounds => "HoldsUpToBounds",
        Outcome::Fails => "Fails",
    }
}

impl VerdictJson {
    pub fn new(v: &Verdict, r: &FiniteRing, m: &Monoid) -> VerdictJson {
        let mr = MonoidRing::new(r, m);
        let terms = |x: &ringlab_core::MonoidRingElement| {
            x.terms()
                .map(|(g, c)| TermJson {
                    monoid: m.format_elem(g),
                    coefficient: r.label(c).into(),
                })
                .collect()
        };
        VerdictJson {
            property: v.variant.name().into(),
            bounds: BoundsJson {
                ring: v.bounds.ring.clone(),
                ring_order: v.bounds.ring_order,
                monoid: m.name().into(),
                fragment: v.bounds.fragment.clone(),
                fragment_size: v.bounds.fragment_size,
                pairs: v.bounds.pairs,
                strategy: v.bounds.strategy.into(),
            },
            outcome: outcome_name(v.outcome).into(),
            witness: v.witness.as_ref().map(|w| WitnessJson {
                alpha: mr.format(&w.alpha),
                beta: mr.format(&w.beta),
                alpha_terms: terms(&w.alpha),
                beta_terms: terms(&w.beta),
                g: m.format_elem(&w.g),
                h: m.format_elem(&w.h),
                a: r.label(w.a).into(),
                b: r.label(w.b).into(),
                product: r.label(w.product).into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesJson {
    pub reduced: bool,
    pub semicommutative: bool,
    pub two_primal: bool,
    #[serde(rename = "NI")]
    pub ni: bool,
    pub nilpotent_pp: bool,
    pub dedekind_finite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentJson {
    pub element: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub ring: String,
    pub order: usize,
    pub nilpotents: Vec<NilpotentJson>,
    pub lower_nilradical: Vec<String>,
    pub upper_nilradical: Vec<String>,
    pub classes: ClassesJson,
    /// `[a, c, b]` with `ab = 0` and `acb ≠ 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semicommutative_witness: Option<[String; 3]>,
}

fn labels(r: &FiniteRing, s: &ElemSet) -> Vec<String> {
    s.iter().map(|x| r.label(x).to_string()).collect()
}

impl ProfileJson {
    pub fn new(e: &RingEntry) -> ProfileJson {
        let r = &e.ring;
        let p: &RadicalProfile = &e.profile;
        let f = e.classes.flags;
        ProfileJson {
            ring: e.name.clone(),
            order: r.order(),
            nilpotents: p
                .nilpotents
                .iter()
                .map(|x| NilpotentJson {
                    element: r.label(x).into(),
                    index: p.nilpotency_index[x].unwrap_or(0),
                })
                .collect(),
            lower_nilradical: labels(r, &p.lower),
            upper_nilradical: labels(r, &p.upper),
            classes: ClassesJson {
                reduced: f.reduced,
                semicommutative: f.semicommutative,
                two_primal: f.two_primal,
                ni: f.ni,
                nilpotent_pp: e.nilpotent_pp,
                dedekind_finite: f.dedekind_finite,
            },
            semicommutative_witness: e
                .classes
                .semicommutative_witness
                .map(|(a, c, b)| [r.label(a).into(), r.label(c).into(), r.label(b).into()]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ring;

    #[test]
    fn ring_round_trip() {
        let r = ring("t2(z2)").unwrap();
        let json = RingFile::from_ring(&r).to_json().unwrap();
        let back = RingFile::from_json(&json).unwrap().to_ring().unwrap();
        assert!(back.same_tables(&r));
        assert_eq!(back.labels(), r.labels());
        assert_eq!(back.name(), r.name());
    }

    #[test]
    fn rejects_broken_tables() {
        let mut f = RingFile::from_ring(&ring("z3").unwrap());
        f.mul[1][1] = 2;
        assert!(f.to_ring().is_err());
    }
}
