//! Fixed-universe vertex subsets backed by an inline bit-vector.
//!
//! Every set carries the size of the universe it lives in. Set algebra is
//! only defined between sets over the same universe; mixing universes is a
//! logic error caught by debug assertions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};

/// Largest vertex count a [`VertexSet`] (and therefore a graph) can hold.
pub const MAX_VERTICES: usize = 512;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of `{0, .., universe_size - 1}`.
///
/// The storage is inline, so sets are `Copy` and never allocate. Bits at
/// positions `>= universe_size` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: u16,
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set over a universe of `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`.
    #[inline]
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe of {n} exceeds {MAX_VERTICES}");
        VertexSet {
            universe: n as u16,
            words: [0; WORDS],
        }
    }

    /// The whole universe `{0, .., n - 1}`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        let whole = n / 64;
        for w in set.words.iter_mut().take(whole) {
            *w = u64::MAX;
        }
        if !n.is_multiple_of(64) {
            set.words[whole] = (1u64 << (n % 64)) - 1;
        }
        set
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut set = Self::empty(n);
        set.insert(v);
        set
    }

    /// Builds a set from vertex indices. Panics on an index outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Builds a set over a universe of at most 64 vertices from a raw mask.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut set = Self::empty(n);
        set.words[0] = mask & Self::full(n).words[0];
        set
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe_size() && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe_size(),
            "vertex {v} outside universe of size {}",
            self.universe
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe_size() {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    /// Copy of `self` with `v` added.
    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    /// Copy of `self` with `v` removed.
    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        Self::full(self.universe_size()).difference(self)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The low 64 bits as a mask; only meaningful for universes of at most 64.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(
            self.universe, other.universe,
            "set algebra across different universes"
        );
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = op(self.words[i], other.words[i]);
        }
        VertexSet {
            universe: self.universe,
            words,
        }
    }
}

/// Colexicographic order: sets compare as the binary numbers spelled by
/// their bit patterns, highest vertex most significant.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for i in (0..WORDS).rev() {
                match self.words[i].cmp(&other.words[i]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(&rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(&rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(&rhs)
    }
}

pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = &mut self.words[self.index];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}
