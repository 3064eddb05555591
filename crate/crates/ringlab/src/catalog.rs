//! Built-in rings and monoids, addressed by stable names.
//!
//! Ring names: `z<n>`, products `R1xR2x…`, `t<n>(R)`, `m<n>(R)`, `h3(R)`,
//! `skewT<n>(R,endo)` and the skew families `t(R,n,endo)`, `s(…)`, `a(…)`,
//! `b(…)`. Endomorphisms are `id` and `swap` (on `SxS`).
//!
//! Monoid names: `trivial`, `nat`, `nat<k>`, `c<n>`, `lz2`, `matrix-units`,
//! `free<g>`, `nilword(g,n)`, `ab(d1,…)` (`0` is a free factor),
//! `prod(M,N)` and `coprod(M1,…)`.

use ringlab_core::construct::{
    a_ring, b_ring, full_matrix, h3, s_ring, skew_upper_triangular, t_ring, upper_triangular,
};
use ringlab_core::ideal::enumerate_ideals;
use ringlab_core::monoid::{
    coproduct_monoid, cyclic_group, fg_abelian, free_commutative, free_word, make_lz2,
    make_matrix_unit_monoid, product_monoid, trivial_monoid,
};
use ringlab_core::radical::{class_predicates_from, is_nilpotent_pp, ClassReport};
use ringlab_core::ring::{direct_product, make_zmod, swap_endomorphism, Endomorphism};
use ringlab_core::{ElemSet, FiniteRing, Ideal, Monoid, RadicalProfile, IDEAL_ENUMERATION_CAP};

use crate::error::{LabError, LabResult};

pub const CATALOG_RINGS: &[&str] = &[
    "z2",
    "z3",
    "z4",
    "z8",
    "z12",
    "z2xz2",
    "z2xz4",
    "t2(z2)",
    "t2(z4)",
    "t3(z2)",
    "m2(z2)",
    "m2(z4)",
    "h3(z2)",
    "t(z2,3,id)",
    "s(z2,3,id)",
    "a(z2,4,id)",
    "b(z2,4,id)",
    "skewT2(z2xz2,swap)",
];

pub const CATALOG_MONOIDS: &[&str] = &[
    "trivial",
    "nat",
    "nat2",
    "c2",
    "c3",
    "c4",
    "lz2",
    "matrix-units",
    "free2",
    "prod(nat,c2)",
];

/// Splits on `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// `head(args)` with balanced parentheses, returning `(head, args)`.
fn call(s: &str) -> Option<(&str, Vec<&str>)> {
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    let inner = &s[open + 1..s.len() - 1];
    let args = split_top(inner, ',');
    // reject "f(a)(b)" and unbalanced inner text
    let mut depth = 0i32;
    for ch in inner.chars() {
        depth += match ch {
            '(' => 1,
            ')' => -1,
            _ => 0,
        };
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then(|| (&s[..open], args))
}

fn number(s: &str, what: &str) -> LabResult<usize> {
    s.trim()
        .parse()
        .map_err(|_| LabError::usage(format!("expected a number for {what}, got `{s}`")))
}

fn bad_ring(name: &str) -> LabError {
    LabError::usage(format!("unknown ring `{name}` (see `ringlab catalog`)"))
}

/// Builds the ring named `name`; the result carries `name` verbatim.
pub fn ring(name: &str) -> LabResult<FiniteRing> {
    let name = name.trim();
    let mut r = build_ring(name)?;
    r.set_name(name);
    Ok(r)
}

fn build_ring(name: &str) -> LabResult<FiniteRing> {
    let factors = split_top(name, 'x');
    if factors.len() > 1 {
        let rings = factors
            .iter()
            .map(|f| ring(f))
            .collect::<LabResult<Vec<_>>>()?;
        let refs: Vec<&FiniteRing> = rings.iter().collect();
        return Ok(direct_product(&refs)?);
    }
    if let Some(n) = name.strip_prefix('z') {
        if n.chars().all(|c| c.is_ascii_digit()) && !n.is_empty() {
            return Ok(make_zmod(number(n, "z<n>")?)?);
        }
    }
    let (head, args) = call(name).ok_or_else(|| bad_ring(name))?;
    let base = || ring(args[0]);
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(bad_ring(name))
        }
    };
    match head {
        "h3" => {
            arity(1)?;
            Ok(h3(&base()?)?.ring)
        }
        "t" | "s" | "a" | "b" => {
            arity(3)?;
            let r = base()?;
            let n = number(args[1], "size")?;
            let e = endomorphism(&r, args[0], args[2])?;
            let m = match head {
                "t" => t_ring(&r, n, &e)?,
                "s" => s_ring(&r, n, &e)?,
                "a" => a_ring(&r, n, &e)?,
                _ => b_ring(&r, n, &e)?,
            };
            Ok(m.ring)
        }
        _ => {
            if let Some(n) = head.strip_prefix("skewT") {
                arity(2)?;
                let r = base()?;
                let e = endomorphism(&r, args[0], args[1])?;
                return Ok(skew_upper_triangular(&r, number(n, "size")?, &e)?.ring);
            }
            if let Some(n) = head.strip_prefix('t') {
                arity(1)?;
                return Ok(upper_triangular(&base()?, number(n, "size")?)?.ring);
            }
            if let Some(n) = head.strip_prefix('m') {
                arity(1)?;
                return Ok(full_matrix(&base()?, number(n, "size")?)?.ring);
            }
            Err(bad_ring(name))
        }
    }
}

/// `id` on any ring; `swap` on a ring named `SxS`.
pub fn endomorphism(r: &FiniteRing, ring_name: &str, endo: &str) -> LabResult<Endomorphism> {
    match endo.trim() {
        "id" => Ok(Endomorphism::identity(r)),
        "swap" => {
            let f = split_top(ring_name.trim(), 'x');
            if f.len() != 2 || f[0] != f[1] {
                return Err(LabError::usage(format!(
                    "swap needs a ring of the form SxS, got `{ring_name}`"
                )));
            }
            let s = ring(f[0])?;
            Ok(swap_endomorphism(r, s.order())?)
        }
        other => Err(LabError::usage(format!(
            "unknown endomorphism `{other}` (use id or swap)"
        ))),
    }
}

fn bad_monoid(name: &str) -> LabError {
    LabError::usage(format!("unknown monoid `{name}` (see `ringlab catalog`)"))
}

pub fn monoid(name: &str) -> LabResult<Monoid> {
    let name = name.trim();
    let digits = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    let m = match name {
        "trivial" => trivial_monoid(),
        "nat" => free_commutative(1)?,
        "lz2" => make_lz2(),
        "matrix-units" => make_matrix_unit_monoid(),
        _ if name.starts_with("nat") && digits(&name[3..]) => {
            free_commutative(number(&name[3..], "rank")?)?
        }
        _ if name.starts_with('c') && digits(&name[1..]) => {
            cyclic_group(number(&name[1..], "order")?)?
        }
        _ if name.starts_with("free") && digits(&name[4..]) => {
            free_word(number(&name[4..], "generators")?, None)?
        }
        _ => {
            let (head, args) = call(name).ok_or_else(|| bad_monoid(name))?;
            match (head, args.len()) {
                ("prod", 2) => product_monoid(&monoid(args[0])?, &monoid(args[1])?),
                ("coprod", k) if k >= 1 => coproduct_monoid(
                    &args
                        .iter()
                        .map(|a| monoid(a))
                        .collect::<LabResult<Vec<_>>>()?,
                )?,
                ("nilword", 2) => free_word(
                    number(args[0], "generators")?,
                    Some(number(args[1], "nil degree")?),
                )?,
                ("ab", _) => {
                    let f = args
                        .iter()
                        .map(|a| number(a, "invariant factor").map(|d| d as u64))
                        .collect::<LabResult<Vec<_>>>()?;
                    fg_abelian(f)?
                }
                _ => return Err(bad_monoid(name)),
            }
        }
    };
    Ok(m)
}

/// Right ideals `xR` for every `x`; with an identity every right ideal is a
/// sum of these, so the lattice is a chain iff they are totally ordered.
fn principal_chain(r: &FiniteRing, right: bool) -> bool {
    let principal: Vec<ElemSet> = r
        .elements()
        .map(|x| {
            ElemSet::from_iter(
                r.order(),
                r.elements()
                    .map(|y| if right { r.mul(x, y) } else { r.mul(y, x) }),
            )
        })
        .collect();
    principal
        .iter()
        .all(|a| principal.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
}

/// Right or left uniserial (one-sided ideals totally ordered).
pub fn is_uniserial(r: &FiniteRing) -> bool {
    principal_chain(r, true) || principal_chain(r, false)
}

/// A catalog ring with its radicals and class flags computed once.
#[derive(Debug, Clone)]
pub struct RingEntry {
    pub name: String,
    pub ring: FiniteRing,
    pub profile: RadicalProfile,
    pub classes: ClassReport,
    pub nilpotent_pp: bool,
    pub uniserial: bool,
    /// Two-sided ideals, when the ring is small enough to enumerate them.
    pub ideals: Option<Vec<Ideal>>,
}

impl RingEntry {
    pub fn new(name: &str) -> LabResult<RingEntry> {
        let ring = ring(name)?;
        let profile = RadicalProfile::compute(&ring)?;
        let classes = class_predicates_from(&ring, &profile);
        let ideals = if ring.order() <= IDEAL_ENUMERATION_CAP {
            Some(enumerate_ideals(&ring)?)
        } else {
            None
        };
        Ok(RingEntry {
            name: name.to_string(),
            nilpotent_pp: is_nilpotent_pp(&ring).is_ok(),
            uniserial: is_uniserial(&ring),
            ring,
            profile,
            classes,
            ideals,
        })
    }

    /// `0 ≠ 1`.
    pub fn nonzero(&self) -> bool {
        self.ring.order() > 1
    }

    /// Default `nat` degree for this ring: 3 when `|R| ≤ 4`, else 2.
    pub fn default_degree(&self) -> usize {
        if self.ring.order() <= 4 {
            3
        } else {
            2
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub rings: Vec<RingEntry>,
    pub monoids: Vec<Monoid>,
}

impl Catalog {
    pub fn load() -> LabResult<Catalog> {
        Ok(Catalog {
            rings: CATALOG_RINGS
                .iter()
                .map(|n| RingEntry::new(n))
                .collect::<LabResult<_>>()?,
            monoids: CATALOG_MONOIDS
                .iter()
                .map(|n| monoid(n))
                .collect::<LabResult<_>>()?,
        })
    }

    pub fn ring(&self, name: &str) -> Option<&RingEntry> {
        self.rings.iter().find(|e| e.name == name)
    }

    pub fn monoid(&self, name: &str) -> Option<&Monoid> {
        self.monoids.iter().find(|m| m.name() == name)
    }

    /// Endomorphism names usable with each catalog ring.
    pub fn endomorphisms(&self, entry: &RingEntry) -> Vec<&'static str> {
        let mut out = vec!["id"];
        if endomorphism(&entry.ring, &entry.name, "swap").is_ok() {
            out.push("swap");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_stable() {
        for name in CATALOG_RINGS {
            assert_eq!(ring(name).unwrap().name(), *name);
        }
        for name in CATALOG_MONOIDS {
            assert_eq!(monoid(name).unwrap().name(), *name);
        }
    }

    #[test]
    fn splitting() {
        assert_eq!(
            split_top("skewT2(z2xz2,swap)", 'x'),
            vec!["skewT2(z2xz2,swap)"]
        );
        assert_eq!(split_top("z2xt2(z2)", 'x'), vec!["z2", "t2(z2)"]);
        assert!(call("t2(z2").is_none());
    }

    #[test]
    fn rejects_unknown() {
        assert!(ring("q5").unwrap_err().is_usage());
        assert!(ring("t(z2,3,frob)").unwrap_err().is_usage());
        assert!(ring("skewT2(z2xz4,swap)").unwrap_err().is_usage());
        assert!(monoid("c").unwrap_err().is_usage());
    }
}
