//! Vertex sets used by the search kernels.
//!
//! Graphs with at most 64 vertices run every kernel on plain `u64` masks, so
//! a neighbourhood intersection is a single AND. Larger graphs fall back to
//! [`WideSet`], a heap-allocated word vector with the same interface. Kernels
//! are written once, generic over [`VSet`].

use std::fmt::Debug;
use std::hash::Hash;

/// Number of vertices a single machine word can hold.
pub const NARROW_LIMIT: usize = 64;

/// A set of vertex indices in `0..n`.
pub trait VSet: Clone + Eq + Hash + Debug + Send + Sync + 'static {
    fn empty(n: usize) -> Self;
    /// The set `{0, .., n-1}`.
    fn full(n: usize) -> Self;
    /// Builds a set from a packed little-endian word row.
    fn from_words(words: &[u64]) -> Self;

    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);

    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;

    fn len(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    /// Elements strictly greater than `v`.
    fn above(&self, v: usize) -> Self;

    fn is_subset(&self, other: &Self) -> bool {
        self.and_not(other).is_empty()
    }

    fn intersects(&self, other: &Self) -> bool {
        !self.and(other).is_empty()
    }

    /// Ascending iteration. Collects into a vector; kernels that care about
    /// allocation use `first`/`remove` loops instead.
    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut rest = self.clone();
        while let Some(v) = rest.first() {
            out.push(v);
            rest.remove(v);
        }
        out
    }
}

impl VSet for u64 {
    #[inline]
    fn empty(_n: usize) -> Self {
        0
    }

    #[inline]
    fn full(n: usize) -> Self {
        debug_assert!(n <= NARROW_LIMIT);
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    #[inline]
    fn from_words(words: &[u64]) -> Self {
        words.first().copied().unwrap_or(0)
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < 64 && (*self >> v) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1u64 << v;
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1u64 << v);
    }

    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn or(&self, other: &Self) -> Self {
        self | other
    }

    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        if *self == 0 {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }

    #[inline]
    fn above(&self, v: usize) -> Self {
        if v >= 63 {
            0
        } else {
            self & !((1u64 << (v + 1)) - 1)
        }
    }

    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut rest = *self;
        while rest != 0 {
            out.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        out
    }
}

/// Multi-word vertex set for graphs above [`NARROW_LIMIT`] vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WideSet {
    words: Vec<u64>,
}

impl WideSet {
    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| {
                f(
                    self.words.get(i).copied().unwrap_or(0),
                    other.words.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        WideSet { words }
    }
}

pub(crate) fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VSet for WideSet {
    fn empty(n: usize) -> Self {
        WideSet {
            words: vec![0; word_count(n)],
        }
    }

    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; word_count(n)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        WideSet { words }
    }

    fn from_words(words: &[u64]) -> Self {
        WideSet {
            words: words.to_vec(),
        }
    }

    fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| (w >> (v % 64)) & 1 == 1)
    }

    fn insert(&mut self, v: usize) {
        if self.words.len() <= v / 64 {
            self.words.resize(v / 64 + 1, 0);
        }
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / 64) {
            *w &= !(1u64 << (v % 64));
        }
    }

    fn and(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    fn and_not(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    fn or(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn above(&self, v: usize) -> Self {
        let mut out = self.clone();
        let word = v / 64;
        for w in out.words.iter_mut().take(word) {
            *w = 0;
        }
        if let Some(w) = out.words.get_mut(word) {
            let bit = v % 64;
            *w &= if bit == 63 {
                0
            } else {
                !((1u64 << (bit + 1)) - 1)
            };
        }
        out
    }

    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for (i, &w) in self.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                out.push(i * 64 + rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<S: VSet>(n: usize) {
        let mut a = S::empty(n);
        for v in (0..n).step_by(3) {
            a.insert(v);
        }
        let full = S::full(n);
        assert_eq!(full.len(), n);
        assert!(a.is_subset(&full));
        assert_eq!(a.to_vec(), (0..n).step_by(3).collect::<Vec<_>>());
        assert_eq!(a.above(3).first(), if n > 6 { Some(6) } else { None });
        let b = full.and_not(&a);
        assert_eq!(a.len() + b.len(), n);
        assert!(!a.intersects(&b));
        assert_eq!(a.or(&b), full);
        a.remove(0);
        assert!(!a.contains(0));
    }

    #[test]
    fn narrow_and_wide_agree() {
        for n in [0, 1, 7, 63, 64] {
            exercise::<u64>(n);
            exercise::<WideSet>(n);
        }
        for n in [65, 128, 200] {
            exercise::<WideSet>(n);
        }
    }

    #[test]
    fn above_edge_bits() {
        assert_eq!(u64::MAX.above(63), 0);
        assert_eq!(u64::MAX.above(62), 1u64 << 63);
        let w = WideSet::full(130);
        assert_eq!(w.above(63).first(), Some(64));
        assert_eq!(w.above(129).first(), None);
    }
}
