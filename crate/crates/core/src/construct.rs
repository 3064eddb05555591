//! Matrix-shaped rings over a base ring, optionally skewed by an
//! endomorphism, plus truncated skew polynomials and finite direct systems.
//!
//! A shape partitions the admissible positions of an `n × n` matrix into
//! parameter classes; positions in one class always hold equal entries and
//! positions in no class hold zero. Products use the skew rule
//! `c_ij = Σ_l a_il · α^{l−i}(b_lj)`, which is the ordinary product when `α`
//! is the identity. Closure of every shape is verified at build time.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{pow_sat, size_check, Error, Result};
use crate::radical::{is_two_primal, lower_nilradical_msequence, nilpotents};
use crate::ring::{Endomorphism, FiniteRing, Radix, RingMap};
use crate::set::ElemSet;
use crate::RING_SIZE_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Full,
    UpperTriangular,
    H3,
    SkewUpperTriangular,
    /// `S(R,n,α)`: constant main diagonal.
    ConstMainDiagonal,
    /// `T(R,n,α)`: every diagonal constant.
    ConstAllDiagonals,
    /// `A(R,n,α)`: diagonals `0..⌊n/2⌋` constant, the rest free.
    HalfConstDiagonals,
    /// `B(R,n,α)`: `A` plus a free corner at `(0, n/2 − 1)`.
    HalfConstPlusCorner,
}

#[derive(Debug, Clone)]
pub struct MatrixShape {
    pub n: usize,
    pub constraint: Constraint,
    /// Positions of each parameter class.
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl MatrixShape {
    pub fn new(n: usize, constraint: Constraint) -> Result<MatrixShape> {
        if n == 0 {
            return Err(Error::Invalid("matrix size must be positive".into()));
        }
        let upper = |i: usize, j: usize| i <= j;
        let diag = |d: usize| (0..n - d).map(|i| (i, i + d)).collect::<Vec<_>>();
        let singles = |pred: &dyn Fn(usize, usize) -> bool| {
            let mut v = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if pred(i, j) {
                        v.push(vec![(i, j)]);
                    }
                }
            }
            v
        };
        let classes = match constraint {
            Constraint::Full => singles(&|_, _| true),
            Constraint::UpperTriangular | Constraint::SkewUpperTriangular => singles(&upper),
            Constraint::H3 => {
                if n != 3 {
                    return Err(Error::Invalid("H_3 is 3 × 3".into()));
                }
                [(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)]
                    .iter()
                    .map(|&p| vec![p])
                    .collect()
            }
            Constraint::ConstMainDiagonal => {
                let mut v = vec![diag(0)];
                v.extend(singles(&|i, j| i < j));
                v
            }
            Constraint::ConstAllDiagonals => (0..n).map(diag).collect(),
            Constraint::HalfConstDiagonals | Constraint::HalfConstPlusCorner => {
                let half = n / 2;
                let mut v: Vec<Vec<(usize, usize)>> = (0..half).map(diag).collect();
                if constraint == Constraint::HalfConstPlusCorner {
                    if n < 4 || !n.is_multiple_of(2) {
                        return Err(Error::Invalid("B(R,n,α) needs n = 2k ≥ 4".into()));
                    }
                    let corner = (0, half - 1);
                    for class in v.iter_mut() {
                        class.retain(|&p| p != corner);
                    }
                    v.push(vec![corner]);
                }
                v.extend(singles(&|i, j| j >= i + half));
                v
            }
        };
        Ok(MatrixShape {
            n,
            constraint,
            classes,
        })
    }

    fn is_triangular(&self) -> bool {
        self.classes.iter().flatten().all(|&(i, j)| i <= j)
    }
}

/// A materialized matrix ring with its shape and parameter codec.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    pub ring: FiniteRing,
    pub base: FiniteRing,
    pub shape: MatrixShape,
    pub endo: Option<Endomorphism>,
    radix: Radix,
    /// `class_of[i*n+j]` is the parameter class of a position, if any.
    class_of: Vec<Option<usize>>,
}

fn zero_index(radix: &Radix, base: &FiniteRing, k: usize) -> usize {
    radix.encode(&vec![base.zero(); k])
}

impl MatrixRing {
    pub fn build(
        name: impl Into<String>,
        base: &FiniteRing,
        shape: MatrixShape,
        endo: Option<&Endomorphism>,
    ) -> Result<MatrixRing> {
        let n = shape.n;
        if endo.is_some() && !shape.is_triangular() {
            return Err(Error::Invalid(
                "skew products need a triangular shape".into(),
            ));
        }
        size_check(
            "matrix ring",
            pow_sat(base.order(), shape.classes.len()),
            RING_SIZE_CAP as u128,
        )?;
        let mut class_of = vec![None; n * n];
        for (c, class) in shape.classes.iter().enumerate() {
            for &(i, j) in class {
                class_of[i * n + j] = Some(c);
            }
        }
        let radix = Radix {
            sizes: vec![base.order(); shape.classes.len()],
        };
        let order = radix.total() as usize;
        let powers: Vec<Vec<usize>> = match endo {
            Some(e) => e.powers(n),
            None => vec![base.elements().collect(); n],
        };
        let mats: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                let mut p = vec![0; shape.classes.len()];
                radix.decode(x, &mut p);
                (0..n * n)
                    .map(|k| class_of[k].map_or(base.zero(), |c| p[c]))
                    .collect()
            })
            .collect();
        let encode = |m: &[usize]| -> Result<usize> {
            let mut p = vec![usize::MAX; shape.classes.len()];
            for (k, &v) in m.iter().enumerate() {
                match class_of[k] {
                    None if v != base.zero() => {
                        return Err(Error::ClosureFailure(format!(
                            "nonzero entry at {:?}",
                            (k / n, k % n)
                        )))
                    }
                    None => {}
                    Some(c) if p[c] == usize::MAX => p[c] = v,
                    Some(c) if p[c] != v => {
                        return Err(Error::ClosureFailure(format!(
                            "class {c} holds unequal entries"
                        )));
                    }
                    Some(_) => {}
                }
            }
            Ok(radix.encode(&p))
        };
        let k = shape.classes.len();
        let digits: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                let mut p = vec![0; k];
                radix.decode(x, &mut p);
                p
            })
            .collect();
        // Entries add independently, so addition is digitwise.
        let mut add_t = Vec::with_capacity(order * order);
        let mut sum = vec![0; k];
        for dx in &digits {
            for dy in &digits {
                for c in 0..k {
                    sum[c] = base.add(dx[c], dy[c]);
                }
                add_t.push(radix.encode(&sum) as u16);
            }
        }
        // Products are bilinear and every element is a sum of single-class
        // elements, so closure on single-class pairs gives closure overall.
        let q = base.order();
        let single = |c: usize, a: usize| -> usize {
            let mut p = vec![base.zero(); k];
            p[c] = a;
            radix.encode(&p)
        };
        let mut scratch = vec![0; n * n];
        let mut product = |a: &[usize], b: &[usize]| -> Result<usize> {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = base.zero();
                    for l in 0..n {
                        let (ail, blj) = (a[i * n + l], b[l * n + j]);
                        if ail == base.zero() || blj == base.zero() {
                            continue;
                        }
                        let tw = if endo.is_some() {
                            powers[l - i][blj]
                        } else {
                            blj
                        };
                        acc = base.add(acc, base.mul(ail, tw));
                    }
                    scratch[i * n + j] = acc;
                }
            }
            encode(&scratch)
        };
        let mut basic = vec![0; k * q * k * q];
        for c in 0..k {
            for a in 0..q {
                for d in 0..k {
                    for b in 0..q {
                        basic[((c * q + a) * k + d) * q + b] =
                            product(&mats[single(c, a)], &mats[single(d, b)])?;
                    }
                }
            }
        }
        // left[c][a][y] = single(c, a) · y, summed over the digits of y.
        let zero_elem = zero_index(&radix, base, k);
        let mut left = vec![0; k * q * order];
        for c in 0..k {
            for a in 0..q {
                let row = (c * q + a) * k;
                for (y, dy) in digits.iter().enumerate() {
                    let mut acc = zero_elem;
                    for d in 0..k {
                        acc = add_t[acc * order + basic[(row + d) * q + dy[d]]] as usize;
                    }
                    left[(c * q + a) * order + y] = acc;
                }
            }
        }
        let mut mul_t = Vec::with_capacity(order * order);
        for dx in &digits {
            for y in 0..order {
                let mut acc = zero_elem;
                for c in 0..k {
                    acc = add_t[acc * order + left[(c * q + dx[c]) * order + y]] as usize;
                }
                mul_t.push(acc as u16);
            }
        }
        let zero = encode(&vec![base.zero(); n * n])?;
        let mut id = vec![base.zero(); n * n];
        for i in 0..n {
            id[i * n + i] = base.one();
        }
        let one = encode(&id)
            .map_err(|_| Error::ClosureFailure("identity matrix outside the shape".into()))?;
        let labels: Vec<String> = mats
            .iter()
            .map(|m| {
                let rows: Vec<String> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| base.label(m[i * n + j]))
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                format!("[{}]", rows.join(";"))
            })
            .collect();
        let ring = FiniteRing::from_flat(name.into(), order, add_t, mul_t, zero, one, labels)?;
        Ok(MatrixRing {
            ring,
            base: base.clone(),
            shape,
            endo: endo.cloned(),
            radix,
            class_of,
        })
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    /// Entry `(i, j)` of element `x`.
    pub fn entry(&self, x: usize, i: usize, j: usize) -> usize {
        let n = self.shape.n;
        match self.class_of[i * n + j] {
            None => self.base.zero(),
            Some(c) => {
                let mut p = vec![0; self.shape.classes.len()];
                self.radix.decode(x, &mut p);
                p[c]
            }
        }
    }

    /// Full entry list, row-major.
    pub fn entries(&self, x: usize) -> Vec<usize> {
        let n = self.shape.n;
        let mut p = vec![0; self.shape.classes.len()];
        self.radix.decode(x, &mut p);
        (0..n * n)
            .map(|k| self.class_of[k].map_or(self.base.zero(), |c| p[c]))
            .collect()
    }

    /// Element with the given row-major entries, if they fit the shape.
    pub fn from_entries(&self, m: &[usize]) -> Result<usize> {
        let n = self.shape.n;
        if m.len() != n * n {
            return Err(Error::Invalid("entry count".into()));
        }
        let mut p = vec![usize::MAX; self.shape.classes.len()];
        for (k, &v) in m.iter().enumerate() {
            match self.class_of[k] {
                None if v != self.base.zero() => {
                    return Err(Error::Invalid(format!(
                        "entry {:?} outside the shape",
                        (k / n, k % n)
                    )))
                }
                None => {}
                Some(c) if p[c] == usize::MAX || p[c] == v => p[c] = v,
                Some(_) => {
                    return Err(Error::Invalid(
                        "entries violate the diagonal constraint".into(),
                    ))
                }
            }
        }
        Ok(self.radix.encode(&p))
    }

    /// `r·E_ij` (requires `(i,j)` to be a singleton class).
    pub fn unit(&self, r: usize, i: usize, j: usize) -> Result<usize> {
        let n = self.shape.n;
        let mut m = vec![self.base.zero(); n * n];
        m[i * n + j] = r;
        self.from_entries(&m)
    }

    /// Elements whose entries at each position lie in `allowed(i, j)`.
    pub fn entrywise_set(&self, allowed: impl Fn(usize, usize) -> ElemSet) -> ElemSet {
        let n = self.shape.n;
        let sets: Vec<ElemSet> = (0..n * n).map(|k| allowed(k / n, k % n)).collect();
        ElemSet::from_iter(
            self.ring.order(),
            self.ring.elements().filter(|&x| {
                self.entries(x)
                    .iter()
                    .zip(&sets)
                    .all(|(&v, s)| s.contains(v))
            }),
        )
    }
}

fn suffix(endo: Option<&Endomorphism>) -> String {
    endo.map_or(String::new(), |e| format!(",{}", e.name()))
}

pub fn upper_triangular(r: &FiniteRing, n: usize) -> Result<MatrixRing> {
    MatrixRing::build(
        format!("t{n}({})", r.name()),
        r,
        MatrixShape::new(n, Constraint::UpperTriangular)?,
        None,
    )
}

pub fn full_matrix(r: &FiniteRing, n: usize) -> Result<MatrixRing> {
    MatrixRing::build(
        format!("m{n}({})", r.name()),
        r,
        MatrixShape::new(n, Constraint::Full)?,
        None,
    )
}

pub fn h3(r: &FiniteRing) -> Result<MatrixRing> {
    MatrixRing::build(
        format!("h3({})", r.name()),
        r,
        MatrixShape::new(3, Constraint::H3)?,
        None,
    )
}

pub fn skew_upper_triangular(r: &FiniteRing, n: usize, endo: &Endomorphism) -> Result<MatrixRing> {
    let name = format!("skewT{n}({}{})", r.name(), suffix(Some(endo)));
    MatrixRing::build(
        name,
        r,
        MatrixShape::new(n, Constraint::SkewUpperTriangular)?,
        Some(endo),
    )
}

pub fn s_ring(r: &FiniteRing, n: usize, endo: &Endomorphism) -> Result<MatrixRing> {
    let name = format!("s({},{n}{})", r.name(), suffix(Some(endo)));
    MatrixRing::build(
        name,
        r,
        MatrixShape::new(n, Constraint::ConstMainDiagonal)?,
        Some(endo),
    )
}

pub fn t_ring(r: &FiniteRing, n: usize, endo: &Endomorphism) -> Result<MatrixRing> {
    let name = format!("t({},{n}{})", r.name(), suffix(Some(endo)));
    MatrixRing::build(
        name,
        r,
        MatrixShape::new(n, Constraint::ConstAllDiagonals)?,
        Some(endo),
    )
}

pub fn a_ring(r: &FiniteRing, n: usize, endo: &Endomorphism) -> Result<MatrixRing> {
    let name = format!("a({},{n}{})", r.name(), suffix(Some(endo)));
    MatrixRing::build(
        name,
        r,
        MatrixShape::new(n, Constraint::HalfConstDiagonals)?,
        Some(endo),
    )
}

pub fn b_ring(r: &FiniteRing, n: usize, endo: &Endomorphism) -> Result<MatrixRing> {
    let name = format!("b({},{n}{})", r.name(), suffix(Some(endo)));
    MatrixRing::build(
        name,
        r,
        MatrixShape::new(n, Constraint::HalfConstPlusCorner)?,
        Some(endo),
    )
}

/// Oracle radical against a formula set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub formula: ElemSet,
    pub oracle: ElemSet,
    /// Least element of the symmetric difference.
    pub witness: Option<usize>,
}

impl FormulaCheck {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }

    fn new(formula: ElemSet, oracle: ElemSet) -> Self {
        let witness = formula
            .difference(&oracle)
            .union(&oracle.difference(&formula))
            .iter()
            .next();
        FormulaCheck {
            formula,
            oracle,
            witness,
        }
    }
}

/// Diagonal entries in `N_*(R)`, everything else in the shape free.
fn diagonal_formula(mr: &MatrixRing) -> FormulaCheck {
    let lower = lower_nilradical_msequence(&mr.base);
    let all = ElemSet::full(mr.base.order());
    let formula = mr.entrywise_set(|i, j| if i == j { lower.clone() } else { all.clone() });
    FormulaCheck::new(formula, lower_nilradical_msequence(&mr.ring))
}

/// `N_*(T_n(R)) = {m : m_ii ∈ N_*(R)}`.
pub fn radical_formula_check_tn(r: &FiniteRing, n: usize) -> Result<FormulaCheck> {
    Ok(diagonal_formula(&upper_triangular(r, n)?))
}

/// `N_*(H_3(R))`: diagonal in `N_*(R)`, middle row off-diagonal free.
pub fn radical_formula_check_h3(r: &FiniteRing) -> Result<FormulaCheck> {
    Ok(diagonal_formula(&h3(r)?))
}

/// `N_*(T_n(R,α))`: diagonal in `N_*(R)`, above the diagonal free.
pub fn radical_formula_check_skew(
    r: &FiniteRing,
    n: usize,
    endo: &Endomorphism,
) -> Result<FormulaCheck> {
    Ok(diagonal_formula(&skew_upper_triangular(r, n, endo)?))
}

/// `R[x,α]/(xⁿ)` with coefficient vectors `(a_0, …, a_{n−1})` (`a_0` most
/// significant) and `x·r = α(r)·x`.
pub fn skew_polynomial_quotient(
    r: &FiniteRing,
    n: usize,
    endo: &Endomorphism,
) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::Invalid("truncation degree must be positive".into()));
    }
    size_check(
        "skew polynomial quotient",
        pow_sat(r.order(), n),
        RING_SIZE_CAP as u128,
    )?;
    let radix = Radix {
        sizes: vec![r.order(); n],
    };
    let order = radix.total() as usize;
    let pw = endo.powers(n);
    let coeffs: Vec<Vec<usize>> = (0..order)
        .map(|x| {
            let mut d = vec![0; n];
            radix.decode(x, &mut d);
            d
        })
        .collect();
    let labels = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a != r.zero())
                .map(|(i, &a)| match i {
                    0 => String::from(r.label(a)),
                    1 => format!("{}x", r.label(a)),
                    _ => format!("{}x^{i}", r.label(a)),
                })
                .collect();
            if terms.is_empty() {
                String::from("0")
            } else {
                terms.join("+")
            }
        })
        .collect();
    let mut zero = vec![r.zero(); n];
    let zero_idx = radix.encode(&zero);
    zero[0] = r.one();
    let one_idx = radix.encode(&zero);
    FiniteRing::from_fn(
        format!("{}[x{}]/(x^{n})", r.name(), suffix(Some(endo))),
        order,
        |x, y| {
            let s: Vec<usize> = coeffs[x]
                .iter()
                .zip(&coeffs[y])
                .map(|(&a, &b)| r.add(a, b))
                .collect();
            radix.encode(&s)
        },
        |x, y| {
            let mut c = vec![r.zero(); n];
            for (i, &a) in coeffs[x].iter().enumerate() {
                for (j, &b) in coeffs[y].iter().enumerate().take(n - i) {
                    c[i + j] = r.add(c[i + j], r.mul(a, pw[i][b]));
                }
            }
            radix.encode(&c)
        },
        zero_idx,
        one_idx,
        labels,
    )
}

/// Checks that `Φ(Σ a_i x^i) = (a_0, …, a_{n−1})` is a ring isomorphism
/// `R[x,α]/(xⁿ) → T(R,n,α)` by full table comparison. Returns `Φ`.
pub fn skew_poly_quotient_iso(
    r: &FiniteRing,
    n: usize,
    endo: &Endomorphism,
) -> Result<Option<RingMap>> {
    let p = skew_polynomial_quotient(r, n, endo)?;
    let t = t_ring(r, n, endo)?;
    let radix = Radix {
        sizes: vec![r.order(); n],
    };
    let mut d = vec![0; n];
    let table: Vec<usize> = p
        .elements()
        .map(|x| {
            radix.decode(x, &mut d);
            let mut m = vec![r.zero(); n * n];
            for (k, &a) in d.iter().enumerate() {
                for i in 0..n - k {
                    m[i * n + i + k] = a;
                }
            }
            t.from_entries(&m).expect("constant diagonals fit T")
        })
        .collect();
    let phi = RingMap {
        source_order: p.order(),
        target_order: t.ring.order(),
        table,
    };
    if phi.validate(&p, &t.ring).is_ok() && phi.is_bijective() {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

/// `A ↦ diag(A, A)` from an `n × n` triangular ring into the `2n × 2n` one.
pub fn block_diagonal_embedding(small: &MatrixRing, big: &MatrixRing) -> Result<RingMap> {
    let n = small.n();
    if big.n() != 2 * n || small.base.order() != big.base.order() {
        return Err(Error::Chain(
            "block embedding needs sizes n and 2n over one base".into(),
        ));
    }
    let table = small
        .ring
        .elements()
        .map(|x| {
            let e = small.entries(x);
            let mut m = vec![big.base.zero(); 4 * n * n];
            for i in 0..n {
                for j in 0..n {
                    m[i * 2 * n + j] = e[i * n + j];
                    m[(i + n) * 2 * n + j + n] = e[i * n + j];
                }
            }
            big.from_entries(&m)
        })
        .collect::<Result<Vec<_>>>()?;
    RingMap::new(&small.ring, &big.ring, table)
}

/// `x ↦ (x, x)` into `R × R` as built by [`crate::ring::direct_product`].
pub fn diagonal_embedding(r: &FiniteRing, square: &FiniteRing) -> Result<RingMap> {
    let table = r.elements().map(|x| x * r.order() + x).collect();
    RingMap::new(r, square, table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub name: String,
    pub order: usize,
    pub lower: ElemSet,
    pub nilpotents: ElemSet,
    pub reduced: bool,
    pub two_primal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub stages: Vec<StageReport>,
    /// `σ_i(N_*(R_i)) ⊆ N_*(R_{i+1})` for each map.
    pub forward: Vec<bool>,
}

impl ChainReport {
    pub fn transports_lower_radical(&self) -> bool {
        self.forward.iter().all(|&b| b)
    }
}

/// Finite prefix `R_1 → R_2 → …` of a direct system of unital injective maps.
pub fn direct_limit_chain(rings: &[&FiniteRing], maps: &[RingMap]) -> Result<ChainReport> {
    if rings.is_empty() || maps.len() + 1 != rings.len() {
        return Err(Error::Chain(format!(
            "{} rings need {} maps, got {}",
            rings.len(),
            rings.len().saturating_sub(1),
            maps.len()
        )));
    }
    for (k, m) in maps.iter().enumerate() {
        m.validate(rings[k], rings[k + 1])
            .map_err(|e| Error::Chain(format!("map {k}: {e}")))?;
        if !m.is_injective() {
            return Err(Error::Chain(format!("map {k} is not injective")));
        }
    }
    let stages: Vec<StageReport> = rings
        .iter()
        .map(|r| {
            let lower = lower_nilradical_msequence(r);
            let nil = nilpotents(r);
            StageReport {
                name: r.name().into(),
                order: r.order(),
                reduced: nil.len() == 1,
                two_primal: is_two_primal(r),
                lower,
                nilpotents: nil,
            }
        })
        .collect();
    let forward = maps
        .iter()
        .enumerate()
        .map(|(k, m)| m.image_of(&stages[k].lower).is_subset(&stages[k + 1].lower))
        .collect();
    Ok(ChainReport { stages, forward })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{check_ring_axioms, direct_product, make_zmod, swap_endomorphism};

    #[test]
    fn orders() {
        let z2 = make_zmod(2).unwrap();
        let id = Endomorphism::identity(&z2);
        assert_eq!(upper_triangular(&z2, 2).unwrap().ring.order(), 8);
        assert_eq!(full_matrix(&z2, 2).unwrap().ring.order(), 16);
        assert_eq!(h3(&z2).unwrap().ring.order(), 32);
        assert_eq!(t_ring(&z2, 2, &id).unwrap().ring.order(), 4);
        assert_eq!(a_ring(&z2, 4, &id).unwrap().ring.order(), 32);
        assert_eq!(b_ring(&z2, 4, &id).unwrap().ring.order(), 64);
        assert_eq!(s_ring(&z2, 3, &id).unwrap().ring.order(), 16);
        assert!(b_ring(&z2, 3, &id).is_err());
    }

    #[test]
    fn axioms_hold() {
        let z2 = make_zmod(2).unwrap();
        let z2z2 = direct_product(&[&z2, &z2]).unwrap();
        let sw = swap_endomorphism(&z2z2, 2).unwrap();
        for mr in [
            h3(&z2).unwrap(),
            skew_upper_triangular(&z2z2, 2, &sw).unwrap(),
            t_ring(&z2z2, 2, &sw).unwrap(),
        ] {
            assert!(check_ring_axioms(&mr.ring).is_empty(), "{}", mr.ring.name());
        }
    }

    #[test]
    fn t_ring_convolution() {
        let z2 = make_zmod(2).unwrap();
        let t = t_ring(&z2, 2, &Endomorphism::identity(&z2)).unwrap();
        for x in t.ring.elements() {
            for y in t.ring.elements() {
                let (a0, a1) = (t.entry(x, 0, 0), t.entry(x, 0, 1));
                let (b0, b1) = (t.entry(y, 0, 0), t.entry(y, 0, 1));
                let p = t.ring.mul(x, y);
                assert_eq!(t.entry(p, 0, 0), a0 * b0 % 2);
                assert_eq!(t.entry(p, 0, 1), (a0 * b1 + a1 * b0) % 2);
            }
        }
    }

    #[test]
    fn formulas() {
        let z2 = make_zmod(2).unwrap();
        let c = radical_formula_check_tn(&z2, 2).unwrap();
        assert!(c.equal());
        assert_eq!(c.oracle.len(), 2);
        assert!(radical_formula_check_h3(&z2).unwrap().equal());
    }

    #[test]
    fn skew_polynomials() {
        let z2 = make_zmod(2).unwrap();
        assert!(skew_poly_quotient_iso(&z2, 2, &Endomorphism::identity(&z2))
            .unwrap()
            .is_some());
        let z2z2 = direct_product(&[&z2, &z2]).unwrap();
        let sw = swap_endomorphism(&z2z2, 2).unwrap();
        assert!(skew_poly_quotient_iso(&z2z2, 2, &sw).unwrap().is_some());
    }

    #[test]
    fn chains() {
        let z2 = make_zmod(2).unwrap();
        let z2z2 = direct_product(&[&z2, &z2]).unwrap();
        let z2_4 = direct_product(&[&z2z2, &z2z2]).unwrap();
        let m1 = diagonal_embedding(&z2, &z2z2).unwrap();
        let m2 = diagonal_embedding(&z2z2, &z2_4).unwrap();
        let rep = direct_limit_chain(&[&z2, &z2z2, &z2_4], &[m1.clone(), m2]).unwrap();
        assert!(rep.stages.iter().all(|s| s.reduced && s.lower.len() == 1));
        assert!(rep.transports_lower_radical());
        assert!(direct_limit_chain(&[&z2, &z2z2], &[]).is_err());
        let single = direct_limit_chain(&[&z2], &[]).unwrap();
        assert_eq!(single.stages.len(), 1);
    }
}
