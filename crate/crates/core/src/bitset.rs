//! Fixed-universe bitsets over carrier indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

const WORD: usize = 64;

/// A subset of `0..universe`, stored one bit per element.
///
/// Ordering is lexicographic on the sorted member list, so sorting a list of
/// sets is deterministic and independent of the universe size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        Self { universe, words: vec![0; universe.div_ceil(WORD)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// The set whose members are the set bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD { u64::MAX } else { (1u64 << universe) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD] & (1 << (x % WORD)) != 0
    }

    /// Inserts `x`, returning whether it was newly added.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let w = &mut self.words[x / WORD];
        let bit = 1 << (x % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        Self {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// Union of a family; the empty family gives the empty set.
    pub fn union_all<'a>(universe: usize, sets: impl IntoIterator<Item = &'a ElemSet>) -> Self {
        let mut acc = Self::empty(universe);
        for s in sets {
            acc.union_with(s);
        }
        acc
    }

    /// Intersection of a family; the empty family gives the full set.
    pub fn intersection_all<'a>(universe: usize, sets: impl IntoIterator<Item = &'a ElemSet>) -> Self {
        let mut acc = Self::full(universe);
        for s in sets {
            acc = acc.intersection(s);
        }
        acc
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
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

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct Iter<'a> {
    set: &'a ElemSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
