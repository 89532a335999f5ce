//! Fixed-capacity bit sets over edge indices.
//!
//! Every combinatorial object in this crate (cycles, spanning trees, faces,
//! monomial supports) is a subset of the edge set of one graph, so they all
//! share this representation. Membership, union, intersection and
//! cardinality are single word operations.

use std::cmp::Ordering;
use std::fmt;

/// A set of edge indices in `0..EdgeSet::CAPACITY`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(u128);

impl EdgeSet {
    /// Largest number of distinct edge indices a set can hold.
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        EdgeSet(0)
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY, "edge index {n} out of range");
        if n == Self::CAPACITY {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u128) -> Self {
        EdgeSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        let mut s = Self::empty();
        s.insert(index);
        s
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < Self::CAPACITY, "edge index {index} out of range");
        self.0 |= 1u128 << index;
    }

    pub fn remove(&mut self, index: usize) {
        if index < Self::CAPACITY {
            self.0 &= !(1u128 << index);
        }
    }

    pub fn contains(self, index: usize) -> bool {
        index < Self::CAPACITY && (self.0 >> index) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, ..., n - 1}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of an [`EdgeSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for EdgeSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Lexicographic order on the ascending member sequences, so that
/// `{0, 5} < {1}` and `{0} < {0, 1}`.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff.trailing_zeros() as usize;
        let below = (1u128 << low) - 1;
        // Members strictly below `low` agree. Whoever owns `low` is smaller,
        // unless the other set has already run out of members.
        if self.contains(low) {
            if other.0 & !below == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & !below == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
