//! Localization at a set of central regular elements.
//!
//! In a finite ring a regular element `u` is already a unit (left
//! multiplication by `u` is injective, hence bijective), so `S⁻¹R` is `R`
//! itself and the canonical map is the identity. The collapse is recorded in
//! the returned value rather than simulated with formal fractions.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingMap};
use crate::set::ElemSet;

#[derive(Debug, Clone)]
pub struct Localization {
    pub ring: FiniteRing,
    pub canonical: RingMap,
    pub denominators: ElemSet,
    /// `inverse[u]` for each `u` in the denominator set.
    inverse: Vec<Option<usize>>,
    /// Always `true` for finite rings: `S⁻¹R ≅ R`.
    pub collapsed: bool,
}

impl Localization {
    /// The fraction `u⁻¹a`.
    pub fn fraction(&self, u: usize, a: usize) -> Result<usize> {
        let inv = self
            .inverse
            .get(u)
            .copied()
            .flatten()
            .ok_or_else(|| Error::BadDenominators(format!("{u} is not a denominator")))?;
        Ok(self.ring.mul(inv, a))
    }
}

pub fn localization(r: &FiniteRing, s: &ElemSet) -> Result<Localization> {
    if !s.contains(r.one()) {
        return Err(Error::BadDenominators("must contain 1".into()));
    }
    for u in s.iter() {
        if !r.is_central(u) {
            return Err(Error::BadDenominators(format!(
                "{} is not central",
                r.label(u)
            )));
        }
        if let Some(x) = r
            .elements()
            .find(|&x| x != r.zero() && (r.mul(u, x) == r.zero() || r.mul(x, u) == r.zero()))
        {
            return Err(Error::BadDenominators(format!(
                "{} is a zero divisor ({}·{} = 0)",
                r.label(u),
                r.label(u),
                r.label(x)
            )));
        }
        for v in s.iter() {
            if !s.contains(r.mul(u, v)) {
                return Err(Error::BadDenominators("not multiplicatively closed".into()));
            }
        }
    }
    let inverse = r
        .elements()
        .map(|u| if s.contains(u) { r.inverse(u) } else { None })
        .collect::<Vec<_>>();
    debug_assert!(s.iter().all(|u| inverse[u].is_some()));
    let mut ring = r.clone();
    ring.set_name(format!("S^-1 {}", r.name()));
    Ok(Localization {
        canonical: RingMap::identity(r),
        ring,
        denominators: s.clone(),
        inverse,
        collapsed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;
    use crate::ring::make_zmod;

    #[test]
    fn units_localize_trivially() {
        let z9 = make_zmod(9).unwrap();
        let s = ElemSet::from_iter(9, [1, 2, 4, 8, 7, 5]);
        let loc = localization(&z9, &s).unwrap();
        assert!(loc.collapsed);
        assert!(find_isomorphism(&loc.ring, &z9).unwrap().is_some());
        // 2⁻¹·1 = 5 in ℤ_9
        assert_eq!(loc.fraction(2, 1).unwrap(), 5);
    }

    #[test]
    fn trivial_denominators() {
        let z4 = make_zmod(4).unwrap();
        let loc = localization(&z4, &ElemSet::from_iter(4, [1])).unwrap();
        assert!(loc.ring.same_tables(&z4));
    }

    #[test]
    fn zero_divisor_rejected() {
        let z6 = make_zmod(6).unwrap();
        let s = ElemSet::from_iter(6, [1, 2, 4]);
        assert!(matches!(
            localization(&z6, &s),
            Err(Error::BadDenominators(_))
        ));
    }
}
