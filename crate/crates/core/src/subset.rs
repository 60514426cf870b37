//! Bit-indexed subsets of a poset's ground set.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of element indices of one poset, stored as a little-endian bitmask.
///
/// Every set-valued quantity in this crate (ideals, filters, antichains,
/// interval-closed sets, incomparable regions) is a `Subset` bound to the
/// poset it was built against. The binding is the poset's structural
/// fingerprint, so two structurally equal posets share subsets freely.
///
/// Ordering compares masks as unsigned integers (element `n-1` is the most
/// significant bit). This is the canonical order used for enumeration output
/// and orbit representatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    poset_id: u64,
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub(crate) fn empty_raw(poset_id: u64, n: usize) -> Self {
        Subset {
            poset_id,
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub(crate) fn full_raw(poset_id: u64, n: usize) -> Self {
        let mut s = Self::empty_raw(poset_id, n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Identity of the poset this subset belongs to.
    pub fn poset_id(&self) -> u64 {
        self.poset_id
    }

    /// Size of the ground set (not the number of members).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Same members, re-bound to another poset on the same ground set.
    pub(crate) fn rebound(&self, poset_id: u64) -> Self {
        Subset {
            poset_id,
            n: self.n,
            words: self.words.clone(),
        }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1
    }

    /// Panics if `x` is outside the ground set.
    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n, "element {x} out of range 0..{}", self.n);
        self.words[x / WORD_BITS] |= 1 << (x % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        assert!(x < self.n, "element {x} out of range 0..{}", self.n);
        self.words[x / WORD_BITS] &= !(1 << (x % WORD_BITS));
    }

    #[inline]
    pub fn flip(&mut self, x: usize) {
        assert!(x < self.n, "element {x} out of range 0..{}", self.n);
        self.words[x / WORD_BITS] ^= 1 << (x % WORD_BITS);
    }

    pub fn with(&self, x: usize) -> Self {
        let mut s = self.clone();
        s.insert(x);
        s
    }

    pub fn without(&self, x: usize) -> Self {
        let mut s = self.clone();
        s.remove(x);
        s
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    fn zip_with(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        debug_assert_eq!(self.n, other.n);
        let mut s = Subset {
            poset_id: self.poset_id,
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn complement(&self) -> Subset {
        let mut s = Subset {
            poset_id: self.poset_id,
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub(crate) fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn intersect_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub(crate) fn subtract(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Removes every member with index `<= x`.
    pub(crate) fn clear_through(&mut self, x: usize) {
        let w = x / WORD_BITS;
        for word in &mut self.words[..w] {
            *word = 0;
        }
        let bit = x % WORD_BITS;
        self.words[w] &= if bit == WORD_BITS - 1 {
            0
        } else {
            u64::MAX << (bit + 1)
        };
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
            .then_with(|| self.poset_id.cmp(&other.poset_id))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from(n: usize, xs: &[usize]) -> Subset {
        let mut s = Subset::empty_raw(0, n);
        for &x in xs {
            s.insert(x);
        }
        s
    }

    #[test]
    fn complement_respects_width() {
        let s = from(70, &[0, 65]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(65));
        assert!(c.contains(69));
        assert!(!c.contains(70));
    }

    #[test]
    fn mask_order_is_numeric() {
        // {2} = 0b100 > {0,1} = 0b011
        assert!(from(3, &[2]) > from(3, &[0, 1]));
        assert!(from(70, &[64]) > from(70, &[0, 1, 2, 63]));
    }

    #[test]
    fn clear_through_drops_prefix() {
        let mut s = from(130, &[0, 5, 63, 64, 100]);
        s.clear_through(63);
        assert_eq!(s.to_vec(), vec![64, 100]);
        s.clear_through(64);
        assert_eq!(s.to_vec(), vec![100]);
    }

    #[test]
    fn first_and_iter() {
        let s = from(130, &[3, 64, 129]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.to_vec(), vec![3, 64, 129]);
        assert_eq!(from(5, &[]).first(), None);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..40),
            b in proptest::collection::btree_set(0usize..150, 0..40),
        ) {
            let sa = from(150, &a.iter().copied().collect::<Vec<_>>());
            let sb = from(150, &b.iter().copied().collect::<Vec<_>>());
            let u: Vec<_> = a.union(&b).copied().collect();
            let i: Vec<_> = a.intersection(&b).copied().collect();
            let d: Vec<_> = a.difference(&b).copied().collect();
            prop_assert_eq!(sa.union(&sb).to_vec(), u);
            prop_assert_eq!(sa.intersection(&sb).to_vec(), i);
            prop_assert_eq!(sa.difference(&sb).to_vec(), d);
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
            prop_assert_eq!(sa.len(), a.len());
        }
    }
}
