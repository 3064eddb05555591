//! Statements about lower nil conditions over monoids: the u.p. results,
//! the finite-order and submonoid lemmas, monoid extensions and products.

use ringlab_core::ideal::quotient;
use ringlab_core::monoid::{
    finite_order_element, is_cancellative, lex_order, monoid_ideal_check, torsion_check_fg_abelian,
};
use ringlab_core::monoid_ring::{finite_monoid_ring, MonoidRing};
use ringlab_core::radical::{is_semicommutative_ideal, is_two_primal_rng};
use ringlab_core::verdict::{
    check_m2_counterexample, finite_order_witness, verify_violation, witness_transport_submonoid,
};
use ringlab_core::{FiniteRing, Monoid, MonoidElem, MonoidFragment, Variant};

use super::{describe_witness, Ctx, Expected, Instance, TheoremCheck, Tri};
use crate::catalog::RingEntry;
use crate::error::LabResult;

const LOWER: Variant = Variant::LowerNil;

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck {
            id: "prop-two-primal-lower-nil",
            description: "Over a unique product monoid every 2-primal ring is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: two_primal_lower_nil,
        },
        TheoremCheck {
            id: "cor-semicommutative-lower-nil",
            description: "Over a unique product monoid every semicommutative ring is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: semicommutative_lower_nil,
        },
        TheoremCheck {
            id: "cor-ordered-monoid-two-primal",
            description: "Over a strictly totally ordered monoid 2-primal rings are lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: ordered_monoid,
        },
        TheoremCheck {
            id: "ex-matrix-units",
            description: "The matrix-unit monoid {0, I, E11, E12, E21, E22} is not u.p. and the integers mod n are not lower nil over it.",
            expected: Expected::Witness,
            run: matrix_units,
        },
        TheoremCheck {
            id: "prop-lower-nil-implies-nil",
            description: "Over a u.p. monoid every lower nil M-Armendariz ring is nil M-Armendariz.",
            expected: Expected::Pass,
            run: lower_nil_implies_nil,
        },
        TheoremCheck {
            id: "ex-m2",
            description: "M_2(R) is not lower nil M-Armendariz, via a fixed pair over {e, g} with zero product and an idempotent coefficient product.",
            expected: Expected::Witness,
            run: m2_example,
        },
        TheoremCheck {
            id: "prop-monoid-ideal",
            description: "If N is an ideal of a cancellative monoid M and R is lower nil N-Armendariz, then R is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: monoid_ideal,
        },
        TheoremCheck {
            id: "lem-finite-order",
            description: "A monoid with a nontrivial element of finite order admits no lower nil M-Armendariz ring with 0 != 1.",
            expected: Expected::Witness,
            run: finite_order,
        },
        TheoremCheck {
            id: "lem-submonoid",
            description: "Lower nil M-Armendariz passes to submonoids; counterexamples over a submonoid transport into the ambient monoid.",
            expected: Expected::Witness,
            run: submonoid,
        },
        TheoremCheck {
            id: "thm-torsion-free-abelian",
            description: "A finitely generated abelian group G is torsion-free iff some ring with at least two elements is lower nil G-Armendariz.",
            expected: Expected::Pass,
            run: torsion_free_abelian,
        },
        TheoremCheck {
            id: "prop-monoid-ring-over-up",
            description: "If R is semicommutative and lower nil M-Armendariz and N is u.p., then R[M] is lower nil N-Armendariz.",
            expected: Expected::Pass,
            run: monoid_ring_over_up,
        },
        TheoremCheck {
            id: "thm-polynomial-extension",
            description: "If R is semicommutative and lower nil M-Armendariz and N is u.p., then R[N] is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: polynomial_extension,
        },
        TheoremCheck {
            id: "prop-dedekind-finite",
            description: "Over a cyclic group of order at least 2, every lower nil M-Armendariz ring is Dedekind finite.",
            expected: Expected::Pass,
            run: dedekind_finite,
        },
        TheoremCheck {
            id: "thm-product-monoid",
            description: "If R is semicommutative and lower nil M-Armendariz and N is u.p., then R is lower nil (M x N)-Armendariz.",
            expected: Expected::Pass,
            run: product_monoid_check,
        },
        TheoremCheck {
            id: "cor-coproduct",
            description: "For u.p. monoids M_i and semicommutative R lower nil over one M_i, R is lower nil over their restricted product.",
            expected: Expected::Pass,
            run: coproduct,
        },
        TheoremCheck {
            id: "thm-semicommutative-ideal",
            description: "Over a strictly ordered monoid, if I is a semicommutative ideal and R/I is lower nil M-Armendariz, so is R.",
            expected: Expected::Pass,
            run: semicommutative_ideal,
        },
        TheoremCheck {
            id: "thm-two-primal-ideal-lifting",
            description: "Over a strictly ordered monoid, if N_*(R) is inside a proper ideal I, I is 2-primal and R/I is M-Armendariz, then R is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: two_primal_ideal_lifting,
        },
        TheoremCheck {
            id: "cor-torsion-free-commutative",
            description: "Over a commutative cancellative torsion-free monoid, 2-primal rings and rings with an M-Armendariz quotient by a 2-primal ideal over N_*(R) are lower nil.",
            expected: Expected::Pass,
            run: torsion_free_commutative,
        },
        TheoremCheck {
            id: "prop-uniserial",
            description: "Over a u.p. monoid every right or left uniserial ring is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: uniserial,
        },
        TheoremCheck {
            id: "prop-semicommutative-armendariz-monoid-ring",
            description: "If R is semicommutative and M-Armendariz and N is u.p., then R[M] is lower nil N-Armendariz.",
            expected: Expected::Pass,
            run: semicommutative_armendariz_monoid_ring,
        },
        TheoremCheck {
            id: "lem-two-primal-armendariz",
            description: "If R is 2-primal and M-Armendariz, then R[M] is 2-primal, R is lower nil M-Armendariz and N(R)[M] = N(R[M]) = N_*(R)[M] = N_*(R[M]).",
            expected: Expected::Pass,
            run: two_primal_armendariz_lemma,
        },
        TheoremCheck {
            id: "prop-two-primal-armendariz-extension",
            description: "If R is 2-primal and M-Armendariz and N is u.p., then R[N] is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: two_primal_armendariz_extension,
        },
        TheoremCheck {
            id: "prop-two-primal-armendariz-product",
            description: "If R is 2-primal and M-Armendariz and N is u.p., then R is lower nil (M x N)-Armendariz.",
            expected: Expected::Pass,
            run: two_primal_armendariz_product,
        },
    ]
}

fn two_primal<'c>(ctx: &'c Ctx) -> impl Iterator<Item = &'c RingEntry> {
    ctx.catalog
        .rings
        .iter()
        .filter(|e| e.classes.flags.two_primal)
}

fn semicommutative<'c>(ctx: &'c Ctx) -> impl Iterator<Item = &'c RingEntry> {
    ctx.catalog
        .rings
        .iter()
        .filter(|e| e.classes.flags.semicommutative)
}

fn label(r: &FiniteRing, m: &Monoid) -> String {
    format!("{} over {}", r.name(), m.name())
}

/// `P ⇒ Q` from two verdict-backed truth values.
fn implication(label: String, p: &Tri, q: &Tri, p_name: &str, q_name: &str) -> Instance {
    match (p, q) {
        (_, Tri::Holds(_)) => Instance::pass(label, format!("{q_name} holds")),
        (Tri::Fails(_), _) => Instance::pass(label, format!("{p_name} fails; nothing to check")),
        (Tri::Holds(_), Tri::Fails(v)) => Instance::deviation(
            label,
            format!("{p_name} holds but {q_name} fails ({})", v.bounds.fragment),
        ),
        (Tri::Error(e), _) | (_, Tri::Error(e)) => {
            Instance::deviation(label, format!("error: {e}"))
        }
        _ => Instance::skipped(
            label,
            format!("{p_name} {} / {q_name} {}", p.word(), q.word()),
        ),
    }
}

/// The product monoid `M × N` restricted to degree 1 in each coordinate.
fn product_fragment(m: &Monoid) -> LabResult<MonoidFragment> {
    Ok(m.fragment(1)?)
}

fn two_primal_lower_nil(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        out.push(Instance::check(
            format!("{mname} is u.p."),
            m.up_status().is_up(),
            format!("{:?}", m.up_status()),
        ));
        for e in two_primal(ctx) {
            out.push(
                ctx.tri(&e.ring, &m, LOWER)
                    .expect_holds(label(&e.ring, &m), &e.ring, &m),
            );
        }
    }
    Ok(out)
}

fn semicommutative_lower_nil(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let m = ctx.monoid("nat")?;
    let mut out = Vec::new();
    for e in semicommutative(ctx) {
        out.push(Instance::check(
            format!("{} is 2-primal", e.name),
            e.classes.flags.two_primal,
            "semicommutative",
        ));
        out.push(
            ctx.tri(&e.ring, &m, LOWER)
                .expect_holds(label(&e.ring, &m), &e.ring, &m),
        );
    }
    Ok(out)
}

fn ordered_monoid(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        let order = lex_order(&m)?;
        let f = m.fragment(3)?;
        let v = order.compatibility_violation(&m, &f);
        out.push(Instance::check(
            format!("lex order on {mname} is strictly compatible"),
            v.is_none(),
            format!("checked on {}", f.descriptor()),
        ));
        for e in two_primal(ctx) {
            out.push(
                ctx.tri(&e.ring, &m, LOWER)
                    .expect_holds(label(&e.ring, &m), &e.ring, &m),
            );
        }
    }
    Ok(out)
}

fn matrix_units(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mu = ctx.monoid("matrix-units")?;
    let mut out = Vec::new();
    out.push(Instance::check(
        "matrix-units is not u.p.",
        !mu.up_status().is_up(),
        format!("{:?}", mu.up_status()),
    ));
    for rn in ["z2", "z4"] {
        let r = crate::catalog::ring(rn)?;
        let target = LOWER.target(&r)?;
        let mr = MonoidRing::new(&r, &mu);
        // the lower nil verdict itself
        out.push(
            ctx.tri(&r, &mu, LOWER)
                .expect_fails(label(&r, &mu), &r, &mu),
        );
        // a pair with product exactly 0: the first ordinary Armendariz
        // violation, which must also violate the lower nil condition
        let t = ctx.tri(&r, &mu, Variant::Armendariz);
        let mut inst = t.expect_fails(format!("{rn}: zero-product witness"), &r, &mu);
        if let Some(w) = t.witness() {
            let zero = mr.multiply(&w.alpha, &w.beta).is_zero();
            let unit = w.product == r.one();
            let lower = verify_violation(&r, &mu, &target, &w.alpha, &w.beta);
            if !(zero && unit && lower.is_some_and(|l| !target.contains(l.product))) {
                inst = Instance::deviation(
                    inst.label,
                    format!(
                        "witness lacks zero product or unit coefficient: {}",
                        inst.detail
                    ),
                );
            }
        }
        out.push(inst);
        // the fixed pair: alpha = 1·E22, beta = 1·E11 − 1·E12
        let alpha = mr.parse("1*E22")?;
        let beta = mr.from_terms([
            (r.one(), mu.parse_elem("E11")?),
            (r.neg(r.one()), mu.parse_elem("E12")?),
        ])?;
        let direct = verify_violation(&r, &mu, &target, &alpha, &beta);
        out.push(Instance::check(
            format!("{rn}: 1·E22 and 1·E11 - 1·E12"),
            direct.is_some() && mr.multiply(&alpha, &beta).is_zero(),
            format!("alpha·beta = {}", mr.format(&mr.multiply(&alpha, &beta))),
        ));
    }
    Ok(out)
}

fn lower_nil_implies_nil(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        for e in &ctx.catalog.rings {
            let lower = ctx.tri(&e.ring, &m, LOWER);
            let nil = if lower.holds() {
                ctx.tri(&e.ring, &m, Variant::Nil)
            } else {
                Tri::Skipped("not needed".into())
            };
            out.push(implication(
                label(&e.ring, &m),
                &lower,
                &nil,
                "lower nil",
                "nil",
            ));
        }
    }
    Ok(out)
}

fn m2_example(_ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for rn in ["z2", "z4"] {
        let r = crate::catalog::ring(rn)?;
        let rep = check_m2_counterexample(&r)?;
        out.push(Instance::check(
            format!("m2({rn})"),
            rep.passes() && rep.verdict.fails(),
            format!(
                "product zero: {}, partials zero: {:?}, idempotent: {}, outside N_*: {}",
                rep.product_zero, rep.partials_zero, rep.idempotent, rep.outside_lower
            ),
        ));
    }
    Ok(out)
}

fn monoid_ideal(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        out.push(Instance::check(
            format!("{mname} is cancellative"),
            is_cancellative(&m).is_ok(),
            "",
        ));
        for e in ctx.catalog.rings.iter().filter(|e| e.ring.order() <= 16) {
            let ambient = ctx.fragment(&m, e.ring.order())?;
            // N = elements whose first coordinate is positive
            let ideal: Vec<MonoidElem> = ambient
                .elements()
                .iter()
                .filter(|g| matches!(g, MonoidElem::Vector(v) if v[0] >= 1))
                .cloned()
                .collect();
            if !monoid_ideal_check(&m, &ideal, &ambient) {
                out.push(Instance::deviation(
                    format!("{mname} ideal"),
                    "positive first coordinate is not an ideal",
                ));
                continue;
            }
            // s·F for the first generator s: by cancellation a violation
            // (α, β) over F becomes the violation (sα, sβ) over s·F
            let shift = m.parse_elem(if mname == "nat" { "g" } else { "g1" })?;
            let translate: Vec<MonoidElem> =
                ambient.elements().iter().map(|g| m.op(&shift, g)).collect();
            let nf = MonoidFragment::from_semigroup_elements(&m, translate)?;
            let over_n = ctx.tri_on(&e.ring, &m, &nf, LOWER);
            let over_m = ctx.tri_on(&e.ring, &m, &ambient, LOWER);
            out.push(implication(
                format!(
                    "{} over {mname}: ideal {} vs {}",
                    e.name,
                    nf.len(),
                    ambient.descriptor()
                ),
                &over_n,
                &over_m,
                "lower nil over N",
                "lower nil over M",
            ));
        }
    }
    Ok(out)
}

fn finite_order(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["c2", "c3", "c4"] {
        let m = ctx.monoid(mname)?;
        let (g, n) = finite_order_element(&m, 1).expect("cyclic groups have torsion");
        for e in ctx.catalog.rings.iter().filter(|e| e.nonzero()) {
            let r = &e.ring;
            let t = ctx.tri(r, &m, LOWER);
            let (alpha, beta) = finite_order_witness(r, &m, &g, n)?;
            let canonical = verify_violation(r, &m, &e.profile.lower, &alpha, &beta);
            let mut inst = t.expect_fails(label(r, &m), r, &m);
            if canonical.is_none() && inst.status == super::Status::Pass {
                inst = Instance::deviation(
                    inst.label,
                    "canonical witness sum g^i, e - g does not verify",
                );
            }
            out.push(inst);
        }
    }
    Ok(out)
}

fn transport(
    r: &FiniteRing,
    small: &Monoid,
    big: &Monoid,
    w: &ringlab_core::verdict::Witness,
    embed: &dyn Fn(&MonoidElem) -> MonoidElem,
) -> Instance {
    let lbl = format!("{}: {} into {}", r.name(), small.name(), big.name());
    match witness_transport_submonoid(r, LOWER, w, big, embed) {
        Ok(v) if v.fails() => Instance::pass(lbl, describe_witness(r, big, &v)),
        Ok(_) => Instance::deviation(lbl, "transported pair is not a violation"),
        Err(e) => Instance::deviation(lbl, format!("transport failed: {e}")),
    }
}

fn submonoid(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let e_nat = ctx.monoid("nat")?.identity();
    let right =
        |en: MonoidElem| move |g: &MonoidElem| MonoidElem::Tuple(vec![g.clone(), en.clone()]);
    let left =
        |en: MonoidElem| move |g: &MonoidElem| MonoidElem::Tuple(vec![en.clone(), g.clone()]);
    let z2 = crate::catalog::ring("z2")?;
    // C2 failure into C2 x nat
    let c2 = ctx.monoid("c2")?;
    let c2_nat = ctx.monoid("prod(c2,nat)")?;
    match ctx.tri(&z2, &c2, LOWER) {
        Tri::Fails(v) => out.push(transport(
            &z2,
            &c2,
            &c2_nat,
            v.witness.as_ref().expect("witness"),
            &right(e_nat.clone()),
        )),
        t => out.push(t.expect_fails(label(&z2, &c2), &z2, &c2)),
    }
    // the pair 1·z, 1·e + 1·z over the left-zero monoid {e, z}
    let lz = ctx.monoid("lz2")?;
    let mr = MonoidRing::new(&z2, &lz);
    let lower = LOWER.target(&z2)?;
    let lz_nat = ctx.monoid("prod(lz2,nat)")?;
    match verify_violation(&z2, &lz, &lower, &mr.parse("1*z")?, &mr.parse("1*e + 1*z")?) {
        Some(w) => out.push(transport(&z2, &lz, &lz_nat, &w, &right(e_nat.clone()))),
        None => out.push(Instance::deviation(
            "z2: lz2 pair",
            "1·z, 1·e + 1·z does not violate",
        )),
    }
    // identity embedding
    let mu = ctx.monoid("matrix-units")?;
    match ctx.tri(&z2, &mu, LOWER) {
        Tri::Fails(v) => out.push(transport(
            &z2,
            &mu,
            &mu,
            v.witness.as_ref().expect("witness"),
            &|g| g.clone(),
        )),
        t => out.push(t.expect_fails(label(&z2, &mu), &z2, &mu)),
    }
    // every nonzero catalog ring: C2 into the catalog monoid prod(nat,c2)
    let nat_c2 = ctx.monoid("prod(nat,c2)")?;
    for e in ctx.catalog.rings.iter().filter(|e| e.nonzero()) {
        match ctx.tri(&e.ring, &c2, LOWER) {
            Tri::Fails(v) => out.push(transport(
                &e.ring,
                &c2,
                &nat_c2,
                v.witness.as_ref().expect("witness"),
                &left(e_nat.clone()),
            )),
            t => out.push(t.expect_fails(label(&e.ring, &c2), &e.ring, &c2)),
        }
    }
    Ok(out)
}

fn torsion_free_abelian(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    // (group, degree bound of its fragment)
    let groups: [(&str, usize); 6] = [
        ("ab(0)", 2),
        ("ab(0,0)", 1),
        ("ab(2)", 0),
        ("ab(3)", 0),
        ("ab(0,2)", 1),
        ("ab(4)", 0),
    ];
    for (gname, d) in groups {
        let g = ctx.monoid(gname)?;
        let factors: Vec<u64> = match g.kind() {
            ringlab_core::monoid::MonoidKind::FgAbelian(f) => f.clone(),
            _ => unreachable!("ab(..) names build abelian groups"),
        };
        let torsion_free = torsion_check_fg_abelian(&factors);
        let has_torsion = finite_order_element(&g, d.max(1)).is_some();
        out.push(Instance::check(
            format!("{gname} torsion"),
            torsion_free != has_torsion,
            format!("torsion-free: {torsion_free}"),
        ));
        let frag = g.fragment(d)?;
        if torsion_free {
            // (1) => (2): exhibit rings of order at least 2
            for rn in ["z2", "z4"] {
                let r = crate::catalog::ring(rn)?;
                out.push(
                    ctx.tri_on(&r, &g, &frag, LOWER)
                        .expect_holds(label(&r, &g), &r, &g),
                );
            }
        } else {
            // (2) => (1): no ring with 0 != 1 qualifies. The canonical pair
            // on a torsion element certifies this for every ring; small rings
            // are also scanned.
            let (t, n) = finite_order_element(&g, d.max(1)).expect("torsion element");
            for e in ctx.catalog.rings.iter().filter(|e| e.nonzero()) {
                let lbl = label(&e.ring, &g);
                let (alpha, beta) = finite_order_witness(&e.ring, &g, &t, n)?;
                if verify_violation(&e.ring, &g, &e.profile.lower, &alpha, &beta).is_none() {
                    out.push(Instance::deviation(
                        lbl,
                        "canonical torsion pair does not violate",
                    ));
                } else if e.ring.order() <= 8 {
                    out.push(
                        ctx.tri_on(&e.ring, &g, &frag, LOWER)
                            .expect_fails(lbl, &e.ring, &g),
                    );
                } else {
                    out.push(Instance::pass(
                        lbl,
                        format!("canonical pair on {} of order {n}", g.format_elem(&t)),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Hypothesis "R lower nil over the finite monoid M", then the finite ring
/// R[M] checked over the u.p. monoid `nat`.
fn finite_extension_instances(
    ctx: &Ctx,
    entries: Vec<&RingEntry>,
    hyp: Variant,
    out: &mut Vec<Instance>,
) -> LabResult<()> {
    let nat = ctx.monoid("nat")?;
    for mname in ["trivial", "c2", "lz2"] {
        let m = ctx.monoid(mname)?;
        for e in &entries {
            if e.ring.order() > 16 {
                continue;
            }
            let lbl = format!("{}[{}] over nat", e.name, mname);
            let h = ctx.tri(&e.ring, &m, hyp);
            match h {
                Tri::Holds(_) => {
                    let rm = finite_monoid_ring(&e.ring, &m)?;
                    out.push(
                        ctx.tri(&rm.ring, &nat, LOWER)
                            .expect_holds(lbl, &rm.ring, &nat),
                    );
                }
                Tri::Fails(_) => out.push(Instance::pass(
                    lbl,
                    format!("vacuous: {} fails over {mname}", hyp.name()),
                )),
                t => out.push(t.expect_holds(lbl, &e.ring, &m)),
            }
        }
    }
    Ok(())
}

/// `R` lower nil over `nat × nat` (degree ≤ 1 per coordinate), which is
/// sufficient for the extension statements by `R[M][N] ≅ R[M × N]`.
fn transfer_instances(
    ctx: &Ctx,
    entries: Vec<&RingEntry>,
    hyp: Variant,
    out: &mut Vec<Instance>,
) -> LabResult<()> {
    let nat = ctx.monoid("nat")?;
    let nn = ctx.monoid("prod(nat,nat)")?;
    let f = product_fragment(&nn)?;
    for e in entries.into_iter().filter(|e| e.ring.order() <= 16) {
        let h = ctx.tri(&e.ring, &nat, hyp);
        let c = ctx.tri_on(&e.ring, &nn, &f, LOWER);
        out.push(implication(
            format!(
                "{}: {} over nat => lower nil over nat x nat",
                e.name,
                hyp.name()
            ),
            &h,
            &c,
            &format!("{} over nat", hyp.name()),
            "lower nil over nat x nat",
        ));
    }
    Ok(())
}

fn monoid_ring_over_up(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    finite_extension_instances(ctx, semicommutative(ctx).collect(), LOWER, &mut out)?;
    transfer_instances(ctx, semicommutative(ctx).collect(), LOWER, &mut out)?;
    Ok(out)
}

fn polynomial_extension(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    transfer_instances(ctx, semicommutative(ctx).collect(), LOWER, &mut out)?;
    let c2 = ctx.monoid("c2")?;
    for e in semicommutative(ctx).filter(|e| e.nonzero() && e.ring.order() <= 16) {
        let h = ctx.tri(&e.ring, &c2, LOWER);
        let lbl = format!("{}: hypothesis over c2", e.name);
        out.push(match h {
            Tri::Fails(_) => Instance::pass(lbl, "vacuous: not lower nil over c2"),
            t => t.expect_fails(lbl, &e.ring, &c2),
        });
    }
    Ok(out)
}

fn dedekind_finite(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["c2", "c3", "c4"] {
        let m = ctx.monoid(mname)?;
        for e in ctx.catalog.rings.iter().filter(|e| e.nonzero()) {
            let lbl = label(&e.ring, &m);
            let df = e.classes.flags.dedekind_finite;
            out.push(match ctx.tri(&e.ring, &m, LOWER) {
                Tri::Holds(_) => {
                    Instance::check(lbl, df, "lower nil; Dedekind finiteness required")
                }
                Tri::Fails(_) => Instance::check(
                    lbl,
                    df,
                    "vacuous: not lower nil; Dedekind finite as every finite ring",
                ),
                t => t.expect_holds(lbl, &e.ring, &m),
            });
        }
    }
    Ok(out)
}

fn product_monoid_check(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    transfer_instances(ctx, semicommutative(ctx).collect(), LOWER, &mut out)?;
    // M trivial: M x nat behaves as nat
    let triv = ctx.monoid("trivial")?;
    let tn = ctx.monoid("prod(trivial,nat)")?;
    for e in semicommutative(ctx).filter(|e| e.ring.order() <= 16) {
        let h = ctx.tri(&e.ring, &triv, LOWER);
        let c = ctx.tri(&e.ring, &tn, LOWER);
        out.push(implication(
            format!("{} over trivial x nat", e.name),
            &h,
            &c,
            "lower nil over trivial",
            "lower nil over trivial x nat",
        ));
    }
    Ok(out)
}

fn coproduct(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let nat = ctx.monoid("nat")?;
    for (cname, max_order) in [("coprod(nat,nat)", 16), ("coprod(nat,free2)", 4)] {
        let c = ctx.monoid(cname)?;
        let f = c.fragment(1)?;
        for e in semicommutative(ctx).filter(|e| e.ring.order() <= max_order) {
            let h = ctx.tri(&e.ring, &nat, LOWER);
            let t = ctx.tri_on(&e.ring, &c, &f, LOWER);
            out.push(implication(
                format!("{} over {cname}", e.name),
                &h,
                &t,
                "lower nil over nat",
                &format!("lower nil over {cname}"),
            ));
        }
    }
    Ok(out)
}

/// Proper and improper ideals of catalog rings small enough to enumerate,
/// with uniquely named quotients.
fn ideal_pairs<'c>(
    ctx: &'c Ctx,
    max_order: usize,
) -> Vec<(&'c RingEntry, usize, &'c ringlab_core::Ideal)> {
    let mut out = Vec::new();
    for e in ctx
        .catalog
        .rings
        .iter()
        .filter(|e| e.ring.order() <= max_order)
    {
        if let Some(ideals) = &e.ideals {
            for (k, i) in ideals.iter().enumerate() {
                out.push((e, k, i));
            }
        }
    }
    out
}

fn quotient_named(e: &RingEntry, k: usize, i: &ringlab_core::Ideal) -> LabResult<FiniteRing> {
    let mut q = quotient(&e.ring, i.members())?.ring;
    q.set_name(format!("{}/I{k}", e.name));
    Ok(q)
}

fn semicommutative_ideal(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let nat = ctx.monoid("nat")?;
    let mut out = Vec::new();
    for (e, k, i) in ideal_pairs(ctx, 64) {
        if is_semicommutative_ideal(&e.ring, i).is_err() {
            continue;
        }
        let q = quotient_named(e, k, i)?;
        let hq = ctx.tri(&q, &nat, LOWER);
        let hr = ctx.tri(&e.ring, &nat, LOWER);
        out.push(implication(
            format!("{} with I{k} (|I| = {})", e.name, i.len()),
            &hq,
            &hr,
            "R/I lower nil",
            "R lower nil",
        ));
    }
    Ok(out)
}

fn lifting_pairs<'c>(
    ctx: &'c Ctx,
    max_order: usize,
) -> Vec<(&'c RingEntry, usize, &'c ringlab_core::Ideal)> {
    ideal_pairs(ctx, max_order)
        .into_iter()
        .filter(|(e, _, i)| {
            i.is_proper() && e.profile.lower.is_subset(i.members()) && is_two_primal_rng(&e.ring, i)
        })
        .collect()
}

fn lifting_instances(ctx: &Ctx, m: &Monoid, max_order: usize) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for (e, k, i) in lifting_pairs(ctx, max_order) {
        let q = quotient_named(e, k, i)?;
        let hq = ctx.tri(&q, m, Variant::Armendariz);
        let hr = ctx.tri(&e.ring, m, LOWER);
        out.push(implication(
            format!("{} with I{k} (|I| = {}) over {}", e.name, i.len(), m.name()),
            &hq,
            &hr,
            "R/I Armendariz",
            "R lower nil",
        ));
    }
    Ok(out)
}

fn two_primal_ideal_lifting(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    lifting_instances(ctx, &ctx.monoid("nat")?, 64)
}

fn torsion_free_commutative(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        let commutative = matches!(
            m.kind(),
            ringlab_core::monoid::MonoidKind::FreeCommutative(_)
        );
        out.push(Instance::check(
            format!("{mname} commutative, cancellative, torsion-free"),
            commutative && is_cancellative(&m).is_ok() && finite_order_element(&m, 3).is_none(),
            "",
        ));
        for e in two_primal(ctx) {
            out.push(ctx.tri(&e.ring, &m, LOWER).expect_holds(
                format!("(1) {}", label(&e.ring, &m)),
                &e.ring,
                &m,
            ));
        }
        for mut i in lifting_instances(ctx, &m, 16)? {
            i.label = format!("(2) {}", i.label);
            out.push(i);
        }
    }
    Ok(out)
}

fn uniserial(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for (rn, expect) in [
        ("z2", true),
        ("z4", true),
        ("z8", true),
        ("z12", false),
        ("z2xz2", false),
    ] {
        let e = ctx.catalog.ring(rn).expect("catalog ring");
        out.push(Instance::check(
            format!("{rn} uniserial = {expect}"),
            e.uniserial == expect,
            "",
        ));
    }
    for mname in ["nat", "nat2"] {
        let m = ctx.monoid(mname)?;
        for e in ctx.catalog.rings.iter().filter(|e| e.uniserial) {
            out.push(
                ctx.tri(&e.ring, &m, LOWER)
                    .expect_holds(label(&e.ring, &m), &e.ring, &m),
            );
        }
    }
    Ok(out)
}

fn semicommutative_armendariz_monoid_ring(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    finite_extension_instances(
        ctx,
        semicommutative(ctx).collect(),
        Variant::Armendariz,
        &mut out,
    )?;
    transfer_instances(
        ctx,
        semicommutative(ctx).collect(),
        Variant::Armendariz,
        &mut out,
    )?;
    Ok(out)
}

fn two_primal_armendariz_lemma(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    use ringlab_core::radical::{is_two_primal, lower_nilradical_msequence, nilpotents};
    let mut out = Vec::new();
    for mname in ["trivial", "c2", "lz2"] {
        let m = ctx.monoid(mname)?;
        for e in two_primal(ctx).filter(|e| e.ring.order() <= 16) {
            let lbl = label(&e.ring, &m);
            match ctx.tri(&e.ring, &m, Variant::Armendariz) {
                Tri::Holds(_) => {
                    let rm = finite_monoid_ring(&e.ring, &m)?;
                    let n_img = rm.coefficient_image(&e.profile.nilpotents);
                    let l_img = rm.coefficient_image(&e.profile.lower);
                    let n_rm = nilpotents(&rm.ring);
                    let l_rm = lower_nilradical_msequence(&rm.ring);
                    let lower = ctx.tri(&e.ring, &m, LOWER);
                    let ok = is_two_primal(&rm.ring)
                        && n_img == n_rm
                        && n_img == l_img
                        && l_img == l_rm
                        && lower.holds();
                    out.push(Instance::check(lbl, ok, "R[M] 2-primal and nil sets agree"));
                }
                Tri::Fails(_) => out.push(Instance::pass(lbl, "vacuous: not M-Armendariz")),
                t => out.push(t.expect_holds(lbl, &e.ring, &m)),
            }
        }
    }
    // nat: the lower nil conclusion at bounds
    let nat = ctx.monoid("nat")?;
    for e in two_primal(ctx) {
        let a = ctx.tri(&e.ring, &nat, Variant::Armendariz);
        let l = ctx.tri(&e.ring, &nat, LOWER);
        out.push(implication(
            label(&e.ring, &nat),
            &a,
            &l,
            "Armendariz",
            "lower nil",
        ));
    }
    Ok(out)
}

fn two_primal_armendariz_extension(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    transfer_instances(
        ctx,
        two_primal(ctx).collect(),
        Variant::Armendariz,
        &mut out,
    )?;
    Ok(out)
}

fn two_primal_armendariz_product(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    transfer_instances(
        ctx,
        two_primal(ctx).collect(),
        Variant::Armendariz,
        &mut out,
    )?;
    let triv = ctx.monoid("trivial")?;
    let tn = ctx.monoid("prod(trivial,nat)")?;
    for e in two_primal(ctx).filter(|e| e.ring.order() <= 16) {
        let a = ctx.tri(&e.ring, &triv, Variant::Armendariz);
        let c = ctx.tri(&e.ring, &tn, LOWER);
        out.push(implication(
            format!("{} over trivial x nat", e.name),
            &a,
            &c,
            "Armendariz over trivial",
            "lower nil over trivial x nat",
        ));
    }
    Ok(out)
}
