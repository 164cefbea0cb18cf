//! Fixed-universe vertex sets backed by `u64` blocks.

use std::fmt;

const BITS: usize = 64;

/// A set of vertices drawn from a fixed universe `0..n`.
///
/// All set algebra (union, intersection, difference, complement) stays
/// inside the universe; combining sets over different universes is a
/// programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    blocks: Vec<u64>,
}

#[inline]
fn block_count(n: usize) -> usize {
    n.div_ceil(BITS)
}

impl VertexSet {
    /// Empty set over the universe `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            blocks: vec![0; block_count(n)],
        }
    }

    /// The full universe `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for b in &mut s.blocks {
            *b = u64::MAX;
        }
        s.trim();
        s
    }

    /// Single-element set.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Set holding the given vertices.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the universe (not the cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / BITS] >> (v % BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / BITS] |= 1 << (v % BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / BITS] &= !(1 << (v % BITS));
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Smallest element, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(i * BITS + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for b in &mut s.blocks {
            *b = !*b;
        }
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn remove_all(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            blocks: &self.blocks,
            idx: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        VertexSet {
            n: self.n,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    #[inline]
    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "vertex sets over different universes ({} vs {})",
            self.n, other.n
        );
    }

    // Clear bits beyond the universe so Eq/Hash stay canonical.
    fn trim(&mut self) {
        let rem = self.n % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub struct Ones<'a> {
    blocks: &'a [u64],
    idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.idx += 1;
            if self.idx >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.idx * BITS + bit)
    }
}

impl fmt::Debug for VertexSet {
    fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = VertexSet::from_vertices(10, [0, 3, 7]);
        let b = VertexSet::from_vertices(10, [3, 7, 9]);
        assert_eq!(a.union(&b), VertexSet::from_vertices(10, [0, 3, 7, 9]));
        assert_eq!(a.intersection(&b), VertexSet::from_vertices(10, [3, 7]));
        assert_eq!(a.difference(&b), VertexSet::singleton(10, 0));
        assert_eq!(a.len(), 3);
        assert!(!a.is_empty());
        assert!(VertexSet::empty(10).is_empty());
    }

    #[test]
    fn complement_stays_in_universe() {
        let a = VertexSet::from_vertices(70, [0, 64, 69]);
        let c = a.complement();
        assert_eq!(c.len(), 67);
        assert!(!c.contains(64));
        assert!(c.contains(65));
        assert_eq!(a.complement().complement(), a);
        assert_eq!(VertexSet::full(70).len(), 70);
    }

    #[test]
    fn iter_is_ascending() {
        let a = VertexSet::from_vertices(130, [129, 5, 64, 63]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![5, 63, 64, 129]);
        assert_eq!(a.min(), Some(5));
        assert_eq!(VertexSet::empty(4).min(), None);
    }

    #[test]
    #[should_panic]
    fn universe_mismatch_panics() {
        let _ = VertexSet::empty(4).union(&VertexSet::empty(5));
    }
}
