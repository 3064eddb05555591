//! Element sets over a ring carrier `0..universe`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self::from_iter(
            mask.len(),
            mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` when `i` was not yet present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.universe,
            "element {i} outside universe {}",
            self.universe
        );
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn mask(&self) -> Vec<bool> {
        (0..self.universe).map(|i| self.contains(i)).collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }
}

/// Size first, then lexicographic on the ascending member list.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElemSet::from_iter(70, [0, 3, 65]);
        let b = ElemSet::from_iter(70, [3, 4]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(65) && !a.contains(64));
        assert_eq!(a.union(&b).to_vec(), [0, 3, 4, 65]);
        assert_eq!(a.intersection(&b).to_vec(), [3]);
        assert_eq!(a.difference(&b).to_vec(), [0, 65]);
        assert!(ElemSet::from_iter(70, [3]).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let small = ElemSet::from_iter(12, [0, 6]);
        let big = ElemSet::from_iter(12, [0, 4, 8]);
        let other = ElemSet::from_iter(12, [0, 3, 6, 9]);
        let mut v = vec![other.clone(), big.clone(), small.clone()];
        v.sort();
        assert_eq!(v, [small, big, other]);
    }
}
