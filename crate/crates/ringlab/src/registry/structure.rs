//! Ring constructions: subrings, matrix rings, localizations, products,
//! direct limits, skew constructions and finite monoid rings.

use ringlab_core::construct::{
    a_ring, b_ring, block_diagonal_embedding, diagonal_embedding, direct_limit_chain, h3, s_ring,
    skew_polynomial_quotient, skew_upper_triangular, t_ring, upper_triangular, MatrixRing,
};
use ringlab_core::ideal::{quotient, subring_generated};
use ringlab_core::localize::localization;
use ringlab_core::monoid_ring::{
    finite_monoid_ring, finite_skew_monoid_ring, MonoidRing, MonoidRingElement,
};
use ringlab_core::radical::{lower_nilradical_msequence, weak_annihilator_family};
use ringlab_core::ring::{direct_product, projection, Endomorphism};
use ringlab_core::verdict::{
    check_m2_counterexample, check_nilpotent_pp_monoid_ring, verify_violation, Implication, Witness,
};
use ringlab_core::{ElemSet, FiniteRing, Monoid, MonoidElem, RingMap, Variant};

use super::{describe_witness, Ctx, Expected, Instance, Status, TheoremCheck, Tri};
use crate::catalog;
use crate::error::LabResult;

const LOWER: Variant = Variant::LowerNil;

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck {
            id: "prop-subring",
            description: "A subring S of a lower nil M-Armendariz ring R with N_*(S) inside N_*(R) is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: subring,
        },
        TheoremCheck {
            id: "prop-upper-triangular",
            description: "R is lower nil M-Armendariz iff T_n(R) is.",
            expected: Expected::Pass,
            run: upper_triangular_check,
        },
        TheoremCheck {
            id: "prop-localization",
            description: "For a multiplicative set S of central regular elements, R is lower nil M-Armendariz iff S^-1 R is.",
            expected: Expected::Pass,
            run: localization_check,
        },
        TheoremCheck {
            id: "prop-h3",
            description: "R is lower nil M-Armendariz iff the ring H_3(R) of 3 x 3 matrices with free middle row is.",
            expected: Expected::Pass,
            run: h3_check,
        },
        TheoremCheck {
            id: "prop-direct-product",
            description: "A direct product of rings is lower nil M-Armendariz iff every factor is.",
            expected: Expected::Pass,
            run: direct_product_check,
        },
        TheoremCheck {
            id: "prop-radical-monoid-ring",
            description: "For semicommutative lower nil M-Armendariz R, N_*(R[M]) = N_*(R)[M].",
            expected: Expected::Pass,
            run: radical_monoid_ring,
        },
        TheoremCheck {
            id: "thm-direct-limit",
            description: "A direct limit of lower nil M-Armendariz rings along injective maps is lower nil M-Armendariz.",
            expected: Expected::Pass,
            run: direct_limit,
        },
        TheoremCheck {
            id: "thm-skew-constructions",
            description: "R is lower nil M-Armendariz iff S(R,n,a), T(R,n,a), A(R,n,a), B(R,n,a), T_n(R,a) and the contracted skew monoid ring R[S,a] are.",
            expected: Expected::Pass,
            run: skew_constructions,
        },
        TheoremCheck {
            id: "thm-weak-annihilator",
            description: "For semicommutative lower nil M-Armendariz R, N_R(U) -> N_R[M](U[M]) is a bijection of weak annihilator families.",
            expected: Expected::Pass,
            run: weak_annihilator,
        },
        TheoremCheck {
            id: "thm-nilpotent-pp",
            description: "For semicommutative lower nil M-Armendariz R, R is nilpotent p.p. iff R[M] is.",
            expected: Expected::Pass,
            run: nilpotent_pp,
        },
        TheoremCheck {
            id: "prop-armendariz-implies-lower-nil",
            description: "Over a u.p. monoid, M-Armendariz implies lower nil M-Armendariz, which implies nil M-Armendariz.",
            expected: Expected::Pass,
            run: armendariz_chain,
        },
    ]
}

/// Monoids probing agreement between a ring and a construction over it.
const PROBES: [&str; 4] = ["nat", "c2", "lz2", "matrix-units"];

/// Image of a monoid-ring element under a coefficient map.
fn map_coefficients(
    r: &FiniteRing,
    m: &Monoid,
    x: &MonoidRingElement,
    f: &dyn Fn(usize) -> usize,
) -> LabResult<MonoidRingElement> {
    Ok(MonoidRing::new(r, m).from_terms(x.terms().map(|(g, c)| (f(c), g.clone())))?)
}

/// Re-verifies a witness pushed through a coefficient homomorphism.
fn pushed(
    src: &Witness,
    dst: &FiniteRing,
    m: &Monoid,
    f: &dyn Fn(usize) -> usize,
) -> LabResult<Option<Witness>> {
    let alpha = map_coefficients(dst, m, &src.alpha, f)?;
    let beta = map_coefficients(dst, m, &src.beta, f)?;
    Ok(verify_violation(dst, m, &LOWER.target(dst)?, &alpha, &beta))
}

/// Verdicts of `r` and `s` over `m` must agree. Failures are cross-checked
/// by pushing the witness through `up: R → S` or one of the `down` maps.
fn agreement(
    ctx: &Ctx,
    r: &FiniteRing,
    s: &FiniteRing,
    m: &Monoid,
    up: Option<&RingMap>,
    down: &[RingMap],
) -> LabResult<Instance> {
    let lbl = format!("{} vs {} over {}", r.name(), s.name(), m.name());
    // infinite probes use degree ≤ 2 on both sides so the bounds match
    let f = if m.is_finite() {
        m.fragment(0)?
    } else {
        m.fragment(ctx.config.degree.unwrap_or(2))?
    };
    let tr = ctx.tri_on(r, m, &f, LOWER);
    let ts = ctx.tri_on(s, m, &f, LOWER);
    let inst = match (&tr, &ts) {
        (Tri::Holds(_), Tri::Holds(_)) => Instance::pass(lbl, "both hold"),
        (Tri::Fails(vr), Tri::Fails(vs)) => {
            let wr = vr.witness.as_ref().expect("witness");
            let ws = vs.witness.as_ref().expect("witness");
            let up_ok = match up {
                Some(u) => pushed(wr, s, m, &|c| u.apply(c))?.is_some(),
                None => true,
            };
            let mut down_ok = down.is_empty();
            for d in down {
                down_ok |= pushed(ws, r, m, &|c| d.apply(c))?.is_some();
            }
            Instance::check(
                lbl,
                up_ok && down_ok,
                format!("both fail; {}", describe_witness(s, m, vs)),
            )
        }
        (Tri::Skipped(x), _) | (_, Tri::Skipped(x)) => Instance::skipped(lbl, x.clone()),
        (Tri::Error(x), _) | (_, Tri::Error(x)) => Instance::deviation(lbl, format!("error: {x}")),
        _ => Instance::deviation(
            lbl,
            format!("{} {} but {} {}", r.name(), tr.word(), s.name(), ts.word()),
        ),
    };
    Ok(inst)
}

/// `c ↦ diag(c, …, c)`.
fn scalar_embedding(base: &FiniteRing, mr: &MatrixRing) -> LabResult<RingMap> {
    let n = mr.n();
    let table = base
        .elements()
        .map(|c| {
            let e: Vec<usize> = (0..n * n)
                .map(|k| if k / n == k % n { c } else { base.zero() })
                .collect();
            mr.from_entries(&e)
        })
        .collect::<ringlab_core::Result<Vec<_>>>()?;
    Ok(RingMap::new(base, &mr.ring, table)?)
}

/// The diagonal entry maps `m ↦ m_ii` that are homomorphisms.
fn diagonal_projections(mr: &MatrixRing) -> Vec<RingMap> {
    let n = mr.n();
    (0..n)
        .filter_map(|i| {
            let table = mr.ring.elements().map(|x| mr.entry(x, i, i)).collect();
            RingMap::new(&mr.ring, &mr.base, table).ok()
        })
        .collect()
}

fn matrix_agreement(
    ctx: &Ctx,
    base: &FiniteRing,
    mr: &MatrixRing,
    out: &mut Vec<Instance>,
) -> LabResult<()> {
    let up = scalar_embedding(base, mr).ok();
    let down = diagonal_projections(mr);
    for mn in PROBES {
        let m = ctx.monoid(mn)?;
        out.push(agreement(ctx, base, &mr.ring, &m, up.as_ref(), &down)?);
    }
    Ok(())
}

fn subring(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let nat = ctx.monoid("nat")?;
    let mut pairs: Vec<(FiniteRing, FiniteRing, Vec<usize>)> = Vec::new();
    for e in ctx
        .catalog
        .rings
        .iter()
        .filter(|e| e.nonzero() && e.ring.order() <= 64)
    {
        let r = &e.ring;
        let prime = subring_generated(r, [], true);
        let centre = subring_generated(r, r.elements().filter(|&a| r.is_central(a)), true);
        for (tag, c) in [("prime", prime), ("center", centre)] {
            if let Some((mut s, incl)) = c.ring {
                s.set_name(format!("{}:{tag}", e.name));
                pairs.push((r.clone(), s, incl));
            }
        }
    }
    // scalar diagonal copies of R inside T_2(R)
    for rn in ["z2", "z4", "z2xz2"] {
        let base = catalog::ring(rn)?;
        let t2 = upper_triangular(&base, 2)?;
        let emb = scalar_embedding(&base, &t2)?;
        let c = subring_generated(&t2.ring, base.elements().map(|a| emb.apply(a)), true);
        if let Some((mut s, incl)) = c.ring {
            s.set_name(format!("{}:diag", t2.ring.name()));
            pairs.push((t2.ring.clone(), s, incl));
        }
    }
    for (r, s, incl) in pairs {
        let lbl = format!("{} in {}", s.name(), r.name());
        let ls = lower_nilradical_msequence(&s);
        let lr = lower_nilradical_msequence(&r);
        if !ls.iter().all(|x| lr.contains(incl[x])) {
            out.push(Instance::pass(lbl, "hypothesis N_*(S) inside N_*(R) fails"));
            continue;
        }
        let tr = ctx.tri(&r, &nat, LOWER);
        let ts = ctx.tri(&s, &nat, LOWER);
        out.push(match (&tr, &ts) {
            (_, Tri::Holds(_)) => Instance::pass(lbl, "S holds"),
            (Tri::Fails(_), _) => Instance::pass(lbl, "vacuous: R fails"),
            (Tri::Holds(_), Tri::Fails(v)) => Instance::deviation(
                lbl,
                format!("R holds, S fails: {}", describe_witness(&s, &nat, v)),
            ),
            _ => Instance::skipped(lbl, format!("R {} / S {}", tr.word(), ts.word())),
        });
    }
    Ok(out)
}

fn upper_triangular_check(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for e in ctx
        .catalog
        .rings
        .iter()
        .filter(|e| e.nonzero() && e.ring.order() <= 4)
    {
        let t2 = upper_triangular(&e.ring, 2)?;
        matrix_agreement(ctx, &e.ring, &t2, &mut out)?;
    }
    let z2 = catalog::ring("z2")?;
    let t3 = upper_triangular(&z2, 3)?;
    matrix_agreement(ctx, &z2, &t3, &mut out)?;
    Ok(out)
}

fn h3_check(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for rn in ["z2", "z3", "z4", "z2xz2"] {
        let r = catalog::ring(rn)?;
        let h = h3(&r)?;
        matrix_agreement(ctx, &r, &h, &mut out)?;
    }
    Ok(out)
}

fn localization_check(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let nat = ctx.monoid("nat")?;
    for e in ctx
        .catalog
        .rings
        .iter()
        .filter(|e| e.nonzero() && e.ring.order() <= 16)
    {
        let r = &e.ring;
        // central units form the largest admissible denominator set
        let s = ElemSet::from_iter(
            r.order(),
            r.elements()
                .filter(|&u| r.is_central(u) && r.inverse(u).is_some()),
        );
        let loc = localization(r, &s)?;
        let mut lr = loc.ring.clone();
        lr.set_name(format!("{}[S^-1]", e.name));
        let lbl = format!("{} at {} central units", e.name, s.len());
        if !loc.canonical.is_bijective() {
            out.push(Instance::deviation(lbl, "canonical map is not bijective"));
            continue;
        }
        let canonical = loc.canonical.clone();
        let mut inst = agreement(ctx, r, &lr, &nat, Some(&canonical), &[])?;
        inst.label = lbl;
        out.push(inst);
    }
    Ok(out)
}

fn direct_product_check(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let pairs = [
        ("z2", "z4"),
        ("z2", "z3"),
        ("z3", "z4"),
        ("z2", "m2(z2)"),
        ("z4", "t2(z2)"),
    ];
    for mn in ["nat", "c2", "lz2"] {
        let m = ctx.monoid(mn)?;
        for (a, b) in pairs {
            let (ra, rb) = (catalog::ring(a)?, catalog::ring(b)?);
            let p = direct_product(&[&ra, &rb])?;
            let lbl = format!("{} over {mn}", p.name());
            let (ta, tb, tp) = (
                ctx.tri(&ra, &m, LOWER),
                ctx.tri(&rb, &m, LOWER),
                ctx.tri(&p, &m, LOWER),
            );
            if ![&ta, &tb, &tp].iter().all(|t| t.decided()) {
                let why = [&ta, &tb, &tp]
                    .iter()
                    .map(|t| t.word())
                    .collect::<Vec<_>>()
                    .join("/");
                out.push(Instance::new(
                    lbl,
                    if why.contains("error") {
                        Status::Deviation
                    } else {
                        Status::Skipped
                    },
                    why,
                ));
                continue;
            }
            let factors_hold = ta.holds() && tb.holds();
            if factors_hold != tp.holds() {
                out.push(Instance::deviation(
                    lbl,
                    format!("factors {}/{}, product {}", ta.word(), tb.word(), tp.word()),
                ));
                continue;
            }
            // a product witness projects onto a failing factor
            let mut detail = "all hold".to_string();
            if let Some(w) = tp.witness() {
                let mut projected = false;
                for (k, f) in [&ra, &rb].into_iter().enumerate() {
                    let pr = projection(&[&ra, &rb], k);
                    projected |= pushed(w, f, &m, &|c| pr.apply(c))?.is_some();
                }
                if !projected {
                    out.push(Instance::deviation(
                        lbl,
                        "product witness projects to no factor witness",
                    ));
                    continue;
                }
                detail = describe_witness(&p, &m, tp.verdict().expect("decided"));
            }
            out.push(Instance::pass(lbl, detail));
        }
    }
    Ok(out)
}

fn radical_monoid_ring(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mn in ["trivial", "c2", "c3", "lz2", "matrix-units"] {
        let m = ctx.monoid(mn)?;
        let k = m.order().expect("finite monoid");
        for e in ctx
            .catalog
            .rings
            .iter()
            .filter(|e| e.classes.flags.semicommutative)
        {
            if (e.ring.order() as f64).powi(k as i32) > 256.0 {
                continue;
            }
            let lbl = format!("{}[{mn}]", e.name);
            let rm = finite_monoid_ring(&e.ring, &m)?;
            let image = rm.coefficient_image(&e.profile.lower);
            let actual = lower_nilradical_msequence(&rm.ring);
            let hyp = ctx.tri(&e.ring, &m, LOWER);
            let inst = if !image.is_subset(&actual) {
                Instance::deviation(lbl, "N_*(R)[M] is not inside N_*(R[M])")
            } else if hyp.holds() {
                Instance::check(
                    lbl,
                    image == actual,
                    format!(
                        "|N_*(R)[M]| = {}, |N_*(R[M])| = {}",
                        image.len(),
                        actual.len()
                    ),
                )
            } else if hyp.fails() {
                Instance::pass(
                    lbl,
                    format!("vacuous; containment {} of {}", image.len(), actual.len()),
                )
            } else {
                hyp.expect_holds(lbl, &e.ring, &m)
            };
            out.push(inst);
        }
    }
    Ok(out)
}

fn direct_limit(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let nat = ctx.monoid("nat")?;
    let z2 = catalog::ring("z2")?;
    // z2 → z2 × z2 → (z2 × z2) × (z2 × z2), diagonally
    let sq = direct_product(&[&z2, &z2])?;
    let sq2 = direct_product(&[&sq, &sq])?;
    let diag_chain = (
        vec![z2.clone(), sq.clone(), sq2.clone()],
        vec![
            diagonal_embedding(&z2, &sq)?,
            diagonal_embedding(&sq, &sq2)?,
        ],
    );
    // z2 → T_2(z2) → T_4(z2), scalar then block diagonal
    let t1 = upper_triangular(&z2, 1)?;
    let t2 = upper_triangular(&z2, 2)?;
    let t4 = upper_triangular(&z2, 4)?;
    let tri_chain = (
        vec![t1.ring.clone(), t2.ring.clone(), t4.ring.clone()],
        vec![
            block_diagonal_embedding(&t1, &t2)?,
            block_diagonal_embedding(&t2, &t4)?,
        ],
    );
    for (rings, maps) in [diag_chain, tri_chain] {
        let refs: Vec<&FiniteRing> = rings.iter().collect();
        let names: Vec<&str> = rings.iter().map(|r| r.name()).collect();
        let rep = direct_limit_chain(&refs, &maps)?;
        out.push(Instance::check(
            format!("chain {}", names.join(" -> ")),
            rep.transports_lower_radical(),
            "maps carry N_* into N_*",
        ));
        for r in &rings {
            out.push(
                ctx.tri(r, &nat, LOWER)
                    .expect_holds(format!("stage {}", r.name()), r, &nat),
            );
        }
    }
    Ok(out)
}

fn skew_constructions(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let nat = ctx.monoid("nat")?;
    let nilword = ctx.monoid("nilword(1,2)")?;
    for (rn, en) in [
        ("z2", "id"),
        ("z4", "id"),
        ("z2xz2", "swap"),
        ("z2xz2", "id"),
    ] {
        let r = catalog::ring(rn)?;
        let endo = catalog::endomorphism(&r, rn, en)?;
        let mut rings: Vec<(FiniteRing, Option<RingMap>, Vec<RingMap>)> = Vec::new();
        for mr in [
            s_ring(&r, 3, &endo)?,
            t_ring(&r, 3, &endo)?,
            a_ring(&r, 4, &endo)?,
            b_ring(&r, 4, &endo)?,
            skew_upper_triangular(&r, 2, &endo)?,
        ] {
            let up = scalar_embedding(&r, &mr).ok();
            let down = diagonal_projections(&mr);
            rings.push((mr.ring, up, down));
        }
        let q = skew_polynomial_quotient(&r, 3, &endo)?;
        rings.push((q, None, Vec::new()));
        let mut skew_mr = contracted_skew_monoid_ring(&r, &nilword, &endo)?;
        skew_mr.set_name(format!("{rn}[nilword(1,2),{en}]_0"));
        rings.push((skew_mr, None, Vec::new()));
        for (s, up, down) in rings {
            out.push(agreement(ctx, &r, &s, &nat, up.as_ref(), &down)?);
        }
    }
    Ok(out)
}

/// `R[S, α]` with the zero of `S` identified with the zero of the ring:
/// the quotient of the skew monoid ring by the ideal `R·0`.
pub(super) fn contracted_skew_monoid_ring(
    r: &FiniteRing,
    s: &Monoid,
    endo: &Endomorphism,
) -> LabResult<FiniteRing> {
    let full = finite_skew_monoid_ring(r, s, endo)?;
    let at_zero = ElemSet::from_iter(
        full.ring.order(),
        full.ring
            .elements()
            .filter(|&x| full.decode(x).support().all(|g| *g == MonoidElem::Zero)),
    );
    Ok(quotient(&full.ring, &at_zero)?.ring)
}

fn weak_annihilator(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    let triv = ctx.monoid("trivial")?;
    let c2 = ctx.monoid("c2")?;
    for e in ctx
        .catalog
        .rings
        .iter()
        .filter(|e| e.classes.flags.semicommutative && e.ring.order() <= 64)
    {
        let r = &e.ring;
        let rm = finite_monoid_ring(r, &triv)?;
        let base = weak_annihilator_family(r)?;
        let lifted = weak_annihilator_family(&rm.ring)?;
        let images: std::collections::BTreeSet<ElemSet> =
            base.iter().map(|u| rm.coefficient_image(u)).collect();
        let hyp = ctx.tri(r, &triv, LOWER);
        out.push(Instance::check(
            format!("{}[trivial]", e.name),
            !hyp.holds() || (images.len() == base.len() && images == lifted),
            format!("{} weak annihilators", base.len()),
        ));
        if e.nonzero() {
            out.push(match ctx.tri(r, &c2, LOWER) {
                Tri::Fails(_) => {
                    Instance::pass(format!("{}[c2]", e.name), "vacuous: not lower nil over c2")
                }
                t => t.expect_fails(format!("{}[c2]", e.name), r, &c2),
            });
        }
    }
    Ok(out)
}

fn nilpotent_pp(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mn in ["trivial", "c2", "c3", "lz2", "matrix-units"] {
        let m = ctx.monoid(mn)?;
        let k = m.order().expect("finite monoid");
        for e in ctx.catalog.rings.iter().filter(|e| e.ring.order() <= 16) {
            if (e.ring.order() as f64).powi(k as i32) > 256.0 {
                continue;
            }
            let rep = check_nilpotent_pp_monoid_ring(&e.ring, &m)?;
            let detail = format!(
                "semicommutative {}, lower nil {}, R nilpotent p.p. {}, R[M] nilpotent p.p. {}",
                rep.semicommutative,
                rep.lower_nil,
                rep.base_nilpotent_pp,
                rep.monoid_ring_nilpotent_pp
            );
            out.push(Instance::check(
                format!("{}[{mn}] {:?}", e.name, rep.status),
                rep.status != Implication::Refuted,
                detail,
            ));
        }
    }
    Ok(out)
}

/// For `r = m2(X)` over `nat` or `nat2`: the fixed zero-product pair over
/// `M_2(X)`, carried across by labels and re-verified as an Armendariz
/// violation.
fn m2_zero_product_pair(r: &FiniteRing, m: &Monoid) -> LabResult<Option<Witness>> {
    let Some(base) = r
        .name()
        .strip_prefix("m2(")
        .and_then(|s| s.strip_suffix(')'))
    else {
        return Ok(None);
    };
    let rank = match m.name() {
        "nat" => 1,
        "nat2" => 2,
        _ => return Ok(None),
    };
    let cert = check_m2_counterexample(&catalog::ring(base)?)?;
    let w = cert.verdict.witness.as_ref().expect("fixed pair");
    let mr = MonoidRing::new(r, m);
    let carry = |x: &MonoidRingElement| -> LabResult<Option<MonoidRingElement>> {
        let mut terms = Vec::new();
        for (g, c) in x.terms() {
            let MonoidElem::Vector(v) = g else {
                return Ok(None);
            };
            let Some(c2) = r.index_of(cert.ring_label(c)) else {
                return Ok(None);
            };
            let mut u = vec![0; rank];
            u[0] = v[0];
            terms.push((c2, MonoidElem::Vector(u)));
        }
        Ok(Some(mr.from_terms(terms)?))
    };
    let (Some(alpha), Some(beta)) = (carry(&w.alpha)?, carry(&w.beta)?) else {
        return Ok(None);
    };
    Ok(verify_violation(
        r,
        m,
        &Variant::Armendariz.target(r)?,
        &alpha,
        &beta,
    ))
}

fn armendariz_chain(ctx: &Ctx) -> LabResult<Vec<Instance>> {
    let mut out = Vec::new();
    for mn in ["nat", "nat2"] {
        let m = ctx.monoid(mn)?;
        for e in &ctx.catalog.rings {
            let lbl = format!("{} over {mn}", e.name);
            let r = &e.ring;
            let inst = match ctx.tri(r, &m, LOWER) {
                // lower nil ⇒ nil
                Tri::Holds(_) => match ctx.tri(r, &m, Variant::Nil) {
                    Tri::Holds(_) => Instance::pass(lbl, "lower nil and nil hold"),
                    t => t.expect_holds(lbl, r, &m),
                },
                // not lower nil ⇒ not Armendariz; a lower nil witness with
                // product exactly 0 is already an Armendariz witness
                Tri::Fails(v) => {
                    let w = v.witness.as_ref().expect("witness");
                    let zero = MonoidRing::new(r, &m).multiply(&w.alpha, &w.beta).is_zero();
                    if zero && w.product != r.zero() {
                        Instance::pass(
                            lbl,
                            "lower nil witness has zero product, so Armendariz fails too",
                        )
                    } else if let Some(w) = m2_zero_product_pair(r, &m)? {
                        Instance::pass(
                            lbl,
                            format!(
                                "fixed M2 pair has zero product with {} ≠ 0",
                                r.label(w.product)
                            ),
                        )
                    } else {
                        match ctx.tri(r, &m, Variant::Armendariz) {
                            Tri::Fails(_) => {
                                Instance::pass(lbl, "neither Armendariz nor lower nil")
                            }
                            t => t.expect_fails(lbl, r, &m),
                        }
                    }
                }
                t => t.expect_holds(lbl, r, &m),
            };
            out.push(inst);
        }
    }
    Ok(out)
}
