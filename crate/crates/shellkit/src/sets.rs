//! Bitmask set types: subsets of the facet-index alphabet and vertex sets.

use std::fmt;

/// A subset of the facet-index alphabet `{0, .., n-1}`, stored as a machine
/// word. Families are capped at 64 facets so one word always suffices.
///
/// Indices are 0-based internally; `Display` renders them 1-based to match
/// the word/file conventions of the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSubset(pub u64);

impl IndexSubset {
    pub const EMPTY: IndexSubset = IndexSubset(0);

    /// The full alphabet `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            IndexSubset(u64::MAX)
        } else {
            IndexSubset((1u64 << n) - 1)
        }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u64;
        for &i in indices {
            debug_assert!(i < 64);
            mask |= 1u64 << i;
        }
        IndexSubset(mask)
    }

    pub fn singleton(i: usize) -> Self {
        IndexSubset(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        IndexSubset(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        IndexSubset(self.0 & !(1u64 << i))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        IndexSubset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersect(self, other: Self) -> Self {
        IndexSubset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        IndexSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Iterates the members in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Iterates all subsets of `self` (carry-rippler), the empty set first.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            subset: 0,
            set: self.0,
            done: false,
        }
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub struct SubsetIter {
    subset: u64,
    set: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        if self.done {
            return None;
        }
        let current = self.subset;
        self.subset = self.subset.wrapping_sub(self.set) & self.set;
        self.done = self.subset == 0;
        Some(IndexSubset(current))
    }
}

/// A set of interned vertices. Vertex ids are dense, so a block bitset keeps
/// intersections and `X ≺ Y` tests at a few word operations each.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            bits: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, v: usize) {
        let block = v / 64;
        if block >= self.bits.len() {
            self.bits.resize(block + 1, 0);
        }
        self.bits[block] |= 1u64 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits
            .get(v / 64)
            .is_some_and(|b| b >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    #[must_use]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if self.bits.len() < other.bits.len() {
            self.bits.resize(other.bits.len(), 0);
        }
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Some(block) = self.bits.get_mut(v / 64) {
            *block &= !(1u64 << (v % 64));
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits
            .iter()
            .enumerate()
            .all(|(i, &b)| b & !other.bits.get(i).copied().unwrap_or(0) == 0)
    }

    /// `self ≺ other`: a subset of `other` missing exactly one element.
    pub fn is_lower_neighbor_of(&self, other: &VertexSet) -> bool {
        self.is_subset_of(other) && self.len() + 1 == other.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| BitIter(b).map(move |v| i * 64 + v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::new(0);
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_iteration_covers_powerset() {
        let set = IndexSubset::from_indices(&[0, 2, 4]);
        let subsets: Vec<_> = set.subsets().collect();
        assert_eq!(subsets.len(), 8);
        assert!(subsets.iter().all(|s| s.is_subset_of(set)));
        let mut sorted = subsets.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
    }

    #[test]
    fn full_alphabet_boundaries() {
        assert_eq!(IndexSubset::full(0), IndexSubset::EMPTY);
        assert_eq!(IndexSubset::full(64).len(), 64);
        assert_eq!(IndexSubset::full(7).len(), 7);
    }

    #[test]
    fn display_is_one_based() {
        let set = IndexSubset::from_indices(&[0, 3]);
        assert_eq!(set.to_string(), "{1,4}");
    }

    #[test]
    fn vertex_set_lower_neighbor() {
        let big: VertexSet = [0, 1, 2].into_iter().collect();
        let small: VertexSet = [0, 2].into_iter().collect();
        let tiny: VertexSet = [0].into_iter().collect();
        assert!(small.is_lower_neighbor_of(&big));
        assert!(!tiny.is_lower_neighbor_of(&big));
        assert!(!big.is_lower_neighbor_of(&small));
    }

    #[test]
    fn vertex_set_blocks_beyond_one_word() {
        let mut set = VertexSet::new(0);
        set.insert(3);
        set.insert(70);
        set.insert(129);
        assert_eq!(set.len(), 3);
        assert!(set.contains(70));
        assert_eq!(set.iter().collect::<Vec<_>>(), vec![3, 70, 129]);
        let other: VertexSet = [70, 129, 200].into_iter().collect();
        assert_eq!(set.intersection(&other).len(), 2);
    }
}
