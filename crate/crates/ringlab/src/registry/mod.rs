//! Executable theorem registry.
//!
//! Each [`TheoremCheck`] evaluates one statement over a list of instances
//! drawn from the catalog. Theorem-type statements are audits expected to
//! PASS (no instance contradicts them at the stated bounds); examples are
//! expected to reproduce a WITNESS. An instance whose verdict ran out of
//! budget is SKIPPED and never counts as a pass.

mod audits;
mod checks;
mod structure;

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use ringlab_core::monoid_ring::MonoidRing;
use ringlab_core::verdict::{CheckConfig, Outcome, Strategy, Witness, DEFAULT_PAIR_BUDGET};
use ringlab_core::{Error, FiniteRing, Monoid, MonoidFragment, Variant, Verdict};

use crate::catalog::{self, Catalog};
use crate::error::LabResult;
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    /// Every instance satisfies the statement.
    Pass,
    /// Every instance reproduces a counterexample.
    Witness,
}

impl Expected {
    pub fn name(self) -> &'static str {
        match self {
            Expected::Pass => "PASS",
            Expected::Witness => "WITNESS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Skipped,
    Deviation,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Skipped => "SKIPPED",
            Status::Deviation => "DEVIATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

impl Instance {
    pub fn new(label: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Instance {
            label: label.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn pass(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(label, Status::Pass, detail)
    }

    pub fn deviation(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(label, Status::Deviation, detail)
    }

    pub fn skipped(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(label, Status::Skipped, detail)
    }

    /// Pass when `ok`, deviation otherwise.
    pub fn check(label: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(
            label,
            if ok { Status::Pass } else { Status::Deviation },
            detail,
        )
    }
}

pub type Evaluator = fn(&Ctx) -> LabResult<Vec<Instance>>;

#[derive(Debug, Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    /// The statement being audited, in plain words.
    pub description: &'static str,
    pub expected: Expected,
    pub run: Evaluator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Expected,
    pub status: Status,
    pub instances: Vec<Instance>,
    /// Not part of the JSON report, which must be reproducible.
    pub wall_time: Duration,
}

/// Outcome of a bounded verdict, with budget exhaustion kept apart.
#[derive(Debug, Clone)]
pub enum Tri {
    Holds(Box<Verdict>),
    Fails(Box<Verdict>),
    Skipped(String),
    Error(String),
}

impl Tri {
    pub fn holds(&self) -> bool {
        matches!(self, Tri::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Tri::Fails(_))
    }

    pub fn decided(&self) -> bool {
        self.holds() || self.fails()
    }

    pub fn word(&self) -> &'static str {
        match self {
            Tri::Holds(_) => "holds",
            Tri::Fails(_) => "fails",
            Tri::Skipped(_) => "skipped",
            Tri::Error(_) => "error",
        }
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Tri::Holds(v) | Tri::Fails(v) => Some(v),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Tri::Fails(v) => v.witness.as_ref(),
            _ => None,
        }
    }

    /// Instance for "this verdict must hold".
    pub fn expect_holds(&self, label: impl Into<String>, r: &FiniteRing, m: &Monoid) -> Instance {
        match self {
            Tri::Holds(v) => Instance::pass(label, format!("holds on {}", v.bounds.fragment)),
            Tri::Fails(v) => {
                Instance::deviation(label, format!("fails: {}", describe_witness(r, m, v)))
            }
            Tri::Skipped(s) => Instance::skipped(label, s.clone()),
            Tri::Error(s) => Instance::deviation(label, format!("error: {s}")),
        }
    }

    /// Instance for "this verdict must fail".
    pub fn expect_fails(&self, label: impl Into<String>, r: &FiniteRing, m: &Monoid) -> Instance {
        match self {
            Tri::Fails(v) => Instance::pass(label, describe_witness(r, m, v)),
            Tri::Holds(v) => {
                Instance::deviation(label, format!("no witness on {}", v.bounds.fragment))
            }
            Tri::Skipped(s) => Instance::skipped(label, s.clone()),
            Tri::Error(s) => Instance::deviation(label, format!("error: {s}")),
        }
    }
}

pub fn describe_witness(r: &FiniteRing, m: &Monoid, v: &Verdict) -> String {
    let Some(w) = &v.witness else {
        return format!(
            "{} {}",
            v.variant.name(),
            crate::format::outcome_name(v.outcome)
        );
    };
    let mr = MonoidRing::new(r, m);
    format!(
        "alpha = {}, beta = {}, ({}·{})({}·{}) has {}·{} = {}",
        mr.format(&w.alpha),
        mr.format(&w.beta),
        r.label(w.a),
        m.format_elem(&w.g),
        r.label(w.b),
        m.format_elem(&w.h),
        r.label(w.a),
        r.label(w.b),
        r.label(w.product)
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    /// Pair budget per scan, in canonical pair positions.
    pub budget: u128,
    /// Worker threads; checks are distributed across them.
    pub jobs: usize,
    /// Overrides the default degree bound of every infinite monoid fragment.
    pub degree: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: DEFAULT_PAIR_BUDGET,
            jobs: 1,
            degree: None,
        }
    }
}

/// Shared evaluation context with a verdict cache keyed by ring, fragment
/// and variant. Ring names must therefore identify rings uniquely.
#[derive(Debug)]
pub struct Ctx<'a> {
    pub catalog: &'a Catalog,
    pub config: RunConfig,
    cache: Mutex<HashMap<String, Tri>>,
}

impl<'a> Ctx<'a> {
    pub fn new(catalog: &'a Catalog, config: RunConfig) -> Self {
        Ctx {
            catalog,
            config,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn monoid(&self, name: &str) -> LabResult<Monoid> {
        match self.catalog.monoid(name) {
            Some(m) => Ok(m.clone()),
            None => catalog::monoid(name),
        }
    }

    /// Default degree: `nat` gets 3 over rings of order ≤ 4 and 2 otherwise;
    /// monoids of higher rank get 2 over order ≤ 2 and 1 otherwise.
    pub fn degree_for(&self, m: &Monoid, ring_order: usize) -> usize {
        if let Some(d) = self.config.degree {
            return d;
        }
        let rank_one = m.name() == "nat";
        match (rank_one, ring_order) {
            (true, o) if o <= 4 => 3,
            (true, _) => 2,
            (false, o) if o <= 2 => 2,
            (false, _) => 1,
        }
    }

    pub fn fragment(&self, m: &Monoid, ring_order: usize) -> LabResult<MonoidFragment> {
        Ok(m.fragment(self.degree_for(m, ring_order))?)
    }

    /// Verdict over the default fragment of `m`.
    pub fn tri(&self, r: &FiniteRing, m: &Monoid, variant: Variant) -> Tri {
        match self.fragment(m, r.order()) {
            Ok(f) => self.tri_on(r, m, &f, variant),
            Err(e) => Tri::Error(e.to_string()),
        }
    }

    pub fn tri_on(&self, r: &FiniteRing, m: &Monoid, f: &MonoidFragment, variant: Variant) -> Tri {
        let elems: Vec<String> = f.elements().iter().map(|e| m.format_elem(e)).collect();
        let key = format!(
            "{}|{}|{}|{}",
            r.name(),
            m.name(),
            elems.join(","),
            variant.name()
        );
        if let Some(t) = self.cache.lock().expect("verdict cache").get(&key) {
            return t.clone();
        }
        let cfg = CheckConfig {
            budget: self.config.budget,
            strategy: Strategy::Auto,
        };
        let t = match parallel::check(r, m, f, variant, &cfg, 1) {
            Ok(v) if v.outcome == Outcome::Fails => Tri::Fails(Box::new(v)),
            Ok(v) => Tri::Holds(Box::new(v)),
            Err(Error::Budget { what, spent }) => {
                Tri::Skipped(format!("budget exhausted: {what} after {spent} pairs"))
            }
            Err(e) => Tri::Error(e.to_string()),
        };
        self.cache
            .lock()
            .expect("verdict cache")
            .insert(key, t.clone());
        t
    }
}

/// `*` matches any run, `?` one character; several patterns may be
/// separated by commas.
pub fn matches_filter(filter: &str, id: &str) -> bool {
    fn glob(p: &[u8], s: &[u8]) -> bool {
        match (p.first(), s.first()) {
            (None, None) => true,
            (Some(b'*'), _) => glob(&p[1..], s) || (!s.is_empty() && glob(p, &s[1..])),
            (Some(b'?'), Some(_)) => glob(&p[1..], &s[1..]),
            (Some(a), Some(b)) if a == b => glob(&p[1..], &s[1..]),
            _ => false,
        }
    }
    filter
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .any(|p| glob(p.as_bytes(), id.as_bytes()))
}

/// All checks in registry order.
pub fn registry() -> Vec<TheoremCheck> {
    let mut all = Vec::new();
    all.extend(checks::checks());
    all.extend(structure::checks());
    all.extend(audits::checks());
    all
}

/// Identifiers the registry must cover: one per in-scope statement,
/// example and construction audit.
pub const REQUIRED_IDS: &[&str] = &[
    "prop-two-primal-lower-nil",
    "cor-semicommutative-lower-nil",
    "cor-ordered-monoid-two-primal",
    "ex-matrix-units",
    "prop-subring",
    "prop-lower-nil-implies-nil",
    "prop-upper-triangular",
    "ex-m2",
    "prop-monoid-ideal",
    "prop-localization",
    "lem-finite-order",
    "lem-submonoid",
    "thm-torsion-free-abelian",
    "prop-h3",
    "prop-direct-product",
    "prop-radical-monoid-ring",
    "prop-monoid-ring-over-up",
    "thm-polynomial-extension",
    "prop-dedekind-finite",
    "thm-product-monoid",
    "cor-coproduct",
    "thm-direct-limit",
    "thm-semicommutative-ideal",
    "thm-skew-constructions",
    "thm-weak-annihilator",
    "thm-nilpotent-pp",
    "thm-two-primal-ideal-lifting",
    "cor-torsion-free-commutative",
    "prop-armendariz-implies-lower-nil",
    "prop-uniserial",
    "prop-semicommutative-armendariz-monoid-ring",
    "lem-two-primal-armendariz",
    "prop-two-primal-armendariz-extension",
    "prop-two-primal-armendariz-product",
    "audit-radicals",
    "audit-radical-formulas",
    "audit-lower-nil-radicals",
    "audit-skew-machinery",
    "audit-monoid-ring-oracle",
];

fn run_one(ctx: &Ctx, c: &TheoremCheck) -> CheckResult {
    let start = Instant::now();
    let instances = match (c.run)(ctx) {
        Ok(v) if v.is_empty() => vec![Instance::deviation("(none)", "check produced no instances")],
        Ok(v) => v,
        Err(e) => vec![Instance::deviation("(setup)", format!("error: {e}"))],
    };
    let status = instances
        .iter()
        .map(|i| i.status)
        .max()
        .unwrap_or(Status::Deviation);
    CheckResult {
        id: c.id,
        description: c.description,
        expected: c.expected,
        status,
        instances,
        wall_time: start.elapsed(),
    }
}

/// Runs the checks whose id matches `filter` (all when `None`), spreading
/// them over `config.jobs` threads; results come back in registry order.
pub fn run_registry(
    catalog: &Catalog,
    filter: Option<&str>,
    config: RunConfig,
) -> Vec<CheckResult> {
    let selected: Vec<TheoremCheck> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| matches_filter(f, c.id)))
        .collect();
    let ctx = Ctx::new(catalog, config);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; selected.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..config.jobs.max(1) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                let Some(c) = selected.get(k) else { break };
                let r = run_one(&ctx, c);
                slots.lock().expect("registry results")[k] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("registry results")
        .into_iter()
        .map(|r| r.expect("every check ran"))
        .collect()
}
