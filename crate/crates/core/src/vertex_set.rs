//! Fixed-universe vertex sets.
//!
//! Every set is tied to a universe `0..n` at construction time; inserting an
//! id outside the universe is a bug and panics. Iteration is always in
//! ascending id order, which keeps witnesses, elimination orders and reports
//! reproducible.

/// A set of vertex ids over a fixed universe `0..n`, backed by a bitmap.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
    len: usize,
}

impl VertexSet {
    /// Empty set over the universe `0..n`.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Build a set from any iterator of ids inside `0..universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {} outside universe 0..{}", v, self.universe);
        self.blocks[v / 64] & (1 << (v % 64)) != 0
    }

    /// Insert `v`; returns true if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {} outside universe 0..{}", v, self.universe);
        let (block, bit) = (v / 64, 1u64 << (v % 64));
        let fresh = self.blocks[block] & bit == 0;
        self.blocks[block] |= bit;
        if fresh {
            self.len += 1;
        }
        fresh
    }

    /// Remove `v`; returns true if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {} outside universe 0..{}", v, self.universe);
        let (block, bit) = (v / 64, 1u64 << (v % 64));
        let present = self.blocks[block] & bit != 0;
        self.blocks[block] &= !bit;
        if present {
            self.len -= 1;
        }
        present
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + tz)
                }
            })
        })
    }

    /// Members as a sorted `Vec`.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_len() {
        let mut s = VertexSet::empty(100);
        assert!(s.insert(70));
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert_eq!(s.len(), 2);
        assert!(s.remove(3));
        assert!(!s.remove(3));
        assert_eq!(s.len(), 1);
        assert!(s.contains(70));
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_members(200, [150, 0, 64, 63, 65, 199]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 65, 150, 199]);
        assert_eq!(s.min(), Some(0));
    }

    #[test]
    #[should_panic(expected = "outside universe")]
    fn out_of_universe_rejected() {
        let mut s = VertexSet::empty(5);
        s.insert(5);
    }

    #[test]
    fn subset_and_disjoint() {
        let a = VertexSet::from_members(10, [1, 3]);
        let b = VertexSet::from_members(10, [1, 3, 7]);
        let c = VertexSet::from_members(10, [0, 2]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(a.is_disjoint_from(&c));
        assert!(!a.is_disjoint_from(&b));
    }
}
