//! Ring isomorphism search by backtracking over generator images.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::subring_generated;
use crate::ring::{FiniteRing, RingMap};

/// Default number of partial-map extensions before giving up.
pub const DEFAULT_ISO_BUDGET: u64 = 2_000_000;

/// Invariant used to prune candidate images: additive order, the orbit of
/// powers up to the first repeat, and centrality.
fn signature(r: &FiniteRing, a: usize) -> (usize, usize, usize, bool, bool) {
    let mut seen = vec![usize::MAX; r.order()];
    let mut x = a;
    let mut k = 1;
    while seen[x] == usize::MAX {
        seen[x] = k;
        x = r.mul(x, a);
        k += 1;
    }
    // tail length and period of the power sequence a, a², ...
    let tail = seen[x];
    let period = k - seen[x];
    (
        r.additive_order(a),
        tail,
        period,
        r.is_central(a),
        r.mul(a, a) == a,
    )
}

/// Finds a ring isomorphism `r → s`, or `Ok(None)` when none exists.
///
/// `Err(Error::Budget)` means the search was cut off, which is reported
/// distinctly from a proven absence.
pub fn find_isomorphism(r: &FiniteRing, s: &FiniteRing) -> Result<Option<RingMap>> {
    find_isomorphism_with_budget(r, s, DEFAULT_ISO_BUDGET)
}

pub fn find_isomorphism_with_budget(
    r: &FiniteRing,
    s: &FiniteRing,
    budget: u64,
) -> Result<Option<RingMap>> {
    if r.order() != s.order() {
        return Ok(None);
    }
    let sig_r: Vec<_> = r.elements().map(|a| signature(r, a)).collect();
    let sig_s: Vec<_> = s.elements().map(|a| signature(s, a)).collect();
    let mut hist_r = sig_r.clone();
    let mut hist_s = sig_s.clone();
    hist_r.sort();
    hist_s.sort();
    if hist_r != hist_s {
        return Ok(None);
    }

    // greedy generating set of r as a unital ring
    let mut gens = Vec::new();
    let mut covered = subring_generated(r, [], true).members;
    while covered.len() < r.order() {
        let next = r.elements().find(|&a| !covered.contains(a)).unwrap();
        gens.push(next);
        covered = subring_generated(r, gens.iter().copied(), true).members;
    }

    let mut search = Search {
        r,
        s,
        sig_r: &sig_r,
        sig_s: &sig_s,
        gens: &gens,
        budget,
        spent: 0,
    };
    let mut map = vec![usize::MAX; r.order()];
    let mut inv = vec![usize::MAX; s.order()];
    let mut domain = Vec::new();
    if !search.extend(
        &mut map,
        &mut inv,
        &mut domain,
        &[(r.zero(), s.zero()), (r.one(), s.one())],
    ) {
        return Ok(None);
    }
    match search.backtrack(0, &mut map, &mut inv, &mut domain)? {
        Some(table) => Ok(Some(RingMap {
            source_order: r.order(),
            target_order: s.order(),
            table,
        })),
        None => Ok(None),
    }
}

struct Search<'a> {
    r: &'a FiniteRing,
    s: &'a FiniteRing,
    sig_r: &'a [(usize, usize, usize, bool, bool)],
    sig_s: &'a [(usize, usize, usize, bool, bool)],
    gens: &'a [usize],
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    /// Adds the forced pairs and closes the partial map under `+` and `·`.
    /// Returns `false` on a conflict; the caller restores state from a snapshot.
    fn extend(
        &mut self,
        map: &mut [usize],
        inv: &mut [usize],
        domain: &mut Vec<usize>,
        seed: &[(usize, usize)],
    ) -> bool {
        let mut pending: Vec<(usize, usize)> = seed.to_vec();
        while let Some((a, b)) = pending.pop() {
            self.spent += 1;
            if map[a] != usize::MAX {
                if map[a] != b {
                    return false;
                }
                continue;
            }
            if inv[b] != usize::MAX || self.sig_r[a] != self.sig_s[b] {
                return false;
            }
            map[a] = b;
            inv[b] = a;
            domain.push(a);
            for &x in domain.iter() {
                let fx = map[x];
                pending.push((self.r.add(a, x), self.s.add(b, fx)));
                pending.push((self.r.mul(a, x), self.s.mul(b, fx)));
                pending.push((self.r.mul(x, a), self.s.mul(fx, b)));
            }
        }
        true
    }

    fn backtrack(
        &mut self,
        k: usize,
        map: &mut Vec<usize>,
        inv: &mut Vec<usize>,
        domain: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        if self.spent > self.budget {
            return Err(Error::Budget {
                what: "isomorphism search".into(),
                spent: self.spent,
            });
        }
        if k == self.gens.len() {
            return Ok(Some(map.clone()));
        }
        let g = self.gens[k];
        if map[g] != usize::MAX {
            return self.backtrack(k + 1, map, inv, domain);
        }
        for t in self.s.elements() {
            if inv[t] != usize::MAX || self.sig_r[g] != self.sig_s[t] {
                continue;
            }
            let snapshot = (map.clone(), inv.clone(), domain.len());
            if self.extend(map, inv, domain, &[(g, t)]) {
                if let Some(found) = self.backtrack(k + 1, map, inv, domain)? {
                    return Ok(Some(found));
                }
            }
            *map = snapshot.0;
            *inv = snapshot.1;
            domain.truncate(snapshot.2);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::nilpotents;
    use crate::ring::{direct_product, make_zmod};

    #[test]
    fn crt_and_obstructions() {
        let z2 = make_zmod(2).unwrap();
        let z3 = make_zmod(3).unwrap();
        let z4 = make_zmod(4).unwrap();
        let z6 = make_zmod(6).unwrap();
        let z2z3 = direct_product(&[&z2, &z3]).unwrap();
        let f = find_isomorphism(&z6, &z2z3).unwrap().expect("CRT");
        f.validate(&z6, &z2z3).unwrap();
        assert!(f.is_bijective());

        let z2z2 = direct_product(&[&z2, &z2]).unwrap();
        assert!(find_isomorphism(&z4, &z2z2).unwrap().is_none());

        let id = find_isomorphism(&z4, &z4).unwrap().unwrap();
        assert_eq!(id.table, [0, 1, 2, 3]);
    }

    #[test]
    fn isomorphisms_transport_nilpotents() {
        let z2 = make_zmod(2).unwrap();
        let z4 = make_zmod(4).unwrap();
        let a = direct_product(&[&z2, &z4]).unwrap();
        let b = direct_product(&[&z4, &z2]).unwrap();
        let f = find_isomorphism(&a, &b).unwrap().unwrap();
        assert_eq!(f.image_of(&nilpotents(&a)), nilpotents(&b));
    }
}
