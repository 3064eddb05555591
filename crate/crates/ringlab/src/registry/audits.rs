//! Cross-checks of the machinery itself: radicals against independent
//! computations, closed formulas, skew constructions and monoid rings.

use ringlab_core::construct::{
    a_ring, b_ring, h3, radical_formula_check_h3, radical_formula_check_skew,
    radical_formula_check_tn, s_ring, skew_poly_quotient_iso, skew_polynomial_quotient,
    skew_upper_triangular, t_ring, upper_triangular, Constraint, FormulaCheck, MatrixRing,
    MatrixShape,
};
use ringlab_core::iso::find_isomorphism;
use ringlab_core::monoid_ring::{finite_monoid_ring, finite_skew_monoid_ring, MonoidRing};
use ringlab_core::radical::{lower_nilradical_msequence, lower_nilradical_primes};
use ringlab_core::ring::{direct_product, Endomorphism};
use ringlab_core::{FiniteRing, Variant};

use super::{Ctx, Expected, Instance, TheoremCheck, Tri};
use crate::catalog;
use crate::error::LabResult;

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck {
            id: "audit-radicals",
            description: "The prime-ideal and m-sequence computations of N_*(R) agree, and N_*(R) <= N^*(R) <= N(R) on every catalog ring.",
            expected: Expected::Pass,
            run: radicals,
        },
        TheoremCheck {
            id: "audit-radical-formulas",
            description: "N_* of T_n(R), H_3(R) and T_n(R,a) is the set of matrices with diagonal entries in N_*(R).",
            expected: Expected::Pass,
            run: radical_formulas,
        },
        TheoremCheck {
            id: "audit-lower-nil-radicals",
            description: "Whenever R is lower nil M-Armendariz at the checked bounds, N_*(R) = N^*(R).",
            expected: Expected::Pass,
            run: lower_nil_radicals,
        },
        TheoremCheck {
            id: "audit-skew-machinery",
            description: "Skew constructions with the identity endomorphism equal their plain versions, T(R,n,a) is isomorphic to R[x;a]/(x^n), and E_12 r = a(r) E_12.",
            expected: Expected::Pass,
            run: skew_machinery,
        },
        TheoremCheck {
            id: "audit-monoid-ring-oracle",
            description: "Finite monoid ring tables agree with convolution, z2[lz2] is isomorphic to z2 x z2, and N_*(R)[M] lies inside N_*(R[M]).",
            expected: Expected::Pass,
            run: monoid_ring_oracle,
        },
    ]
}

fn radicals(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for e in &ctx.catalog.rings {
        let p = &e.profile;
        let chain = p.lower.is_subset(&p.upper) && p.upper.is_subset(&p.nilpotents);
        let primes = if e.ring.order() <= 64 {
            let via_primes = lower_nilradical_primes(&e.ring)?;
            Some(via_primes == p.lower)
        } else {
            None
        };
        let detail = format!(
            "|N_*| = {}, |N^*| = {}, |N| = {}, primes {}",
            p.lower.len(),
            p.upper.len(),
            p.nilpotents.len(),
            match primes {
                Some(true) => "agree",
                Some(false) => "DISAGREE",
                None => "not compared (order > 64)",
            }
        );
        out.push(Instance::check(
            e.name.clone(),
            chain && primes != Some(false),
            detail,
        ));
    }
    Ok(out)
}

fn formula(label: String, f: FormulaCheck, out: &mut Vec<Instance>) {
    let detail = match f.witness {
        None => format!("{} elements", f.oracle.len()),
        Some(x) => format!("sets differ at element {x}"),
    };
    out.push(Instance::check(label, f.equal(), detail));
}

fn radical_formulas(_ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for (rn, n) in [("z2", 2), ("z4", 2), ("z2", 3)] {
        let r = catalog::ring(rn)?;
        formula(
            format!("t{n}({rn})"),
            radical_formula_check_tn(&r, n)?,
            &mut out,
        );
    }
    for rn in ["z2", "z4"] {
        let r = catalog::ring(rn)?;
        formula(format!("h3({rn})"), radical_formula_check_h3(&r)?, &mut out);
    }
    for (rn, en, n) in [("z2xz2", "swap", 2), ("z2xz2", "swap", 3), ("z4", "id", 2)] {
        let r = catalog::ring(rn)?;
        let endo = catalog::endomorphism(&r, rn, en)?;
        formula(
            format!("skewT{n}({rn},{en})"),
            radical_formula_check_skew(&r, n, &endo)?,
            &mut out,
        );
    }
    Ok(out)
}

fn lower_nil_radicals(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mn in ["nat", "nat2", "c2", "lz2", "matrix-units"] {
        let m = ctx.monoid(mn)?;
        for e in &ctx.catalog.rings {
            let lbl = format!("{} over {mn}", e.name);
            let equal = e.profile.lower == e.profile.upper;
            out.push(match ctx.tri(&e.ring, &m, Variant::LowerNil) {
                Tri::Holds(_) => Instance::check(
                    lbl,
                    equal,
                    format!(
                        "|N_*| = {}, |N^*| = {}",
                        e.profile.lower.len(),
                        e.profile.upper.len()
                    ),
                ),
                Tri::Fails(_) => {
                    Instance::pass(lbl, format!("not lower nil; N_* = N^* is {equal}"))
                }
                t => t.expect_holds(lbl, &e.ring, &m),
            });
        }
    }
    Ok(out)
}

/// Same shape built with and without the identity endomorphism.
fn identity_vs_plain(
    r: &FiniteRing,
    n: usize,
    c: Constraint,
    out: &mut Vec<Instance>,
) -> LabResult<()> {
    let id = Endomorphism::identity(r);
    let skew = MatrixRing::build("skew", r, MatrixShape::new(n, c)?, Some(&id))?;
    let plain = MatrixRing::build("plain", r, MatrixShape::new(n, c)?, None)?;
    out.push(Instance::check(
        format!("{c:?}({}, {n}) with id", r.name()),
        skew.ring.same_tables(&plain.ring),
        format!("order {}", plain.ring.order()),
    ));
    Ok(())
}

fn skew_machinery(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    // identity endomorphism
    for rn in ["z2", "z4"] {
        let r = catalog::ring(rn)?;
        let id = Endomorphism::identity(&r);
        for (n, c) in [
            (3, Constraint::ConstMainDiagonal),
            (3, Constraint::ConstAllDiagonals),
            (4, Constraint::HalfConstDiagonals),
            (4, Constraint::HalfConstPlusCorner),
        ] {
            if rn == "z4" && n == 4 {
                continue;
            }
            identity_vs_plain(&r, n, c, &mut out)?;
        }
        let sk = skew_upper_triangular(&r, 2, &id)?;
        let plain = upper_triangular(&r, 2)?;
        out.push(Instance::check(
            format!("skewT2({rn},id) = t2({rn})"),
            sk.ring.same_tables(&plain.ring),
            "",
        ));
        let w = ctx.monoid("nilword(1,3)")?;
        let skm = finite_skew_monoid_ring(&r, &w, &id)?;
        let pm = finite_monoid_ring(&r, &w)?;
        out.push(Instance::check(
            format!("{rn}[nilword(1,3)] skewed by id"),
            skm.ring.same_tables(&pm.ring),
            "",
        ));
    }
    // T(R,n,a) against the truncated skew polynomial ring
    for (rn, n, en) in [("z2", 2, "id"), ("z4", 3, "id"), ("z2xz2", 2, "swap")] {
        let r = catalog::ring(rn)?;
        let endo = catalog::endomorphism(&r, rn, en)?;
        let iso = skew_poly_quotient_iso(&r, n, &endo)?;
        out.push(Instance::check(
            format!("{rn}[x,{en}]/(x^{n}) -> t({rn},{n},{en})"),
            iso.is_some(),
            "coefficient vector map",
        ));
    }
    // contracted skew monoid ring over the nil word monoid {1, x, 0 = x^n}
    for (rn, n, en) in [
        ("z2", 2, "id"),
        ("z2xz2", 2, "swap"),
        ("z4", 3, "id"),
        ("z2xz2", 3, "swap"),
    ] {
        let r = catalog::ring(rn)?;
        let endo = catalog::endomorphism(&r, rn, en)?;
        let s = ctx.monoid(&format!("nilword(1,{n})"))?;
        let contracted = super::structure::contracted_skew_monoid_ring(&r, &s, &endo)?;
        let q = skew_polynomial_quotient(&r, n, &endo)?;
        out.push(Instance::check(
            format!(
                "{rn}[nilword(1,{n}),{en}] with 0 identified is {}",
                q.name()
            ),
            find_isomorphism(&contracted, &q)?.is_some(),
            format!("order {}", contracted.order()),
        ));
    }
    // T(z2,2,id) against (a0,a1)(b0,b1) = (a0b0, a0b1 + a1b0)
    let z2 = catalog::ring("z2")?;
    let t = t_ring(&z2, 2, &Endomorphism::identity(&z2))?;
    let coords = |x: usize| (t.entry(x, 0, 0), t.entry(x, 0, 1));
    let mut agree = 0;
    for x in t.ring.elements() {
        for y in t.ring.elements() {
            let ((a0, a1), (b0, b1)) = (coords(x), coords(y));
            let expect = ((a0 * b0) % 2, (a0 * b1 + a1 * b0) % 2);
            if coords(t.ring.mul(x, y)) == expect {
                agree += 1;
            }
        }
    }
    out.push(Instance::check(
        "t(z2,2,id) convolution",
        agree == 16,
        format!("{agree} of 16 products"),
    ));
    // orders of A and B over z2
    let id2 = Endomorphism::identity(&z2);
    out.push(Instance::check(
        "a(z2,4,id) has order 32",
        a_ring(&z2, 4, &id2)?.ring.order() == 32,
        "",
    ));
    out.push(Instance::check(
        "b(z2,4,id) has order 64",
        b_ring(&z2, 4, &id2)?.ring.order() == 64,
        "",
    ));
    out.push(Instance::check(
        "s(z2,3,id) has order 16",
        s_ring(&z2, 3, &id2)?.ring.order() == 16,
        "",
    ));
    // E_12 r = a(r) E_12 in T_2(z2 x z2, swap)
    let r = catalog::ring("z2xz2")?;
    let swap = catalog::endomorphism(&r, "z2xz2", "swap")?;
    let sk = skew_upper_triangular(&r, 2, &swap)?;
    let e12 = sk.unit(r.one(), 0, 1)?;
    let scalar = |c: usize| sk.from_entries(&[c, r.zero(), r.zero(), c]);
    let mut rule = true;
    for c in r.elements() {
        rule &= sk.ring.mul(e12, scalar(c)?) == sk.ring.mul(scalar(swap.apply(c))?, e12);
    }
    out.push(Instance::check(
        "E12 r = swap(r) E12 in skewT2(z2xz2,swap)",
        rule,
        "all r",
    ));
    // H_3 sanity: order |R|^5
    out.push(Instance::check(
        "h3(z2) has order 32",
        h3(&z2)?.ring.order() == 32,
        "",
    ));
    Ok(out)
}

fn monoid_ring_oracle(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let z2 = catalog::ring("z2")?;
    for mn in ["c2", "lz2", "c3", "matrix-units"] {
        let m = ctx.monoid(mn)?;
        let rm = finite_monoid_ring(&z2, &m)?;
        let conv = MonoidRing::new(&z2, &m);
        let mut bad = 0usize;
        for x in rm.ring.elements() {
            for y in rm.ring.elements() {
                if rm.ring.mul(x, y) != rm.encode(&conv.multiply(&rm.decode(x), &rm.decode(y))) {
                    bad += 1;
                }
            }
        }
        let n = rm.ring.order();
        out.push(Instance::check(
            format!("z2[{mn}] tables vs convolution"),
            bad == 0,
            format!("{} pairs, {bad} mismatches", n * n),
        ));
    }
    let lz = ctx.monoid("lz2")?;
    let rm = finite_monoid_ring(&z2, &lz)?;
    let sq = direct_product(&[&z2, &z2])?;
    out.push(Instance::check(
        "z2[lz2] is isomorphic to z2xz2",
        find_isomorphism(&rm.ring, &sq)?.is_some(),
        "",
    ));
    // containment for every semicommutative catalog ring and finite catalog monoid
    for m in ctx.catalog.monoids.iter().filter(|m| m.is_finite()) {
        let k = m.order().expect("finite");
        for e in ctx
            .catalog
            .rings
            .iter()
            .filter(|e| e.classes.flags.semicommutative)
        {
            let lbl = format!("{}[{}]", e.name, m.name());
            // 4096-element tables cost about a second each; keep them for the
            // smallest bases only
            let size = (e.ring.order() as f64).powi(k as i32);
            if size > ringlab_core::RING_SIZE_CAP as f64 || (size > 1024.0 && e.ring.order() > 4) {
                continue;
            }
            let rm = finite_monoid_ring(&e.ring, m)?;
            let image = rm.coefficient_image(&e.profile.lower);
            let actual = lower_nilradical_msequence(&rm.ring);
            out.push(Instance::check(
                lbl,
                image.is_subset(&actual),
                format!("{} inside {}", image.len(), actual.len()),
            ));
        }
    }
    Ok(out)
}
