//! Fixed-width bit sets used for subsets of lattice elements and of space
//! points. Sets compare lexicographically by block, which gives every family
//! of subsets a canonical sort order.

/// A subset of `{0, .., len-1}` stored as 64-bit blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask {
    len: usize,
    blocks: Vec<u64>,
}

impl Mask {
    /// The empty subset of a `len`-element universe.
    pub fn empty(len: usize) -> Self {
        Mask {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    /// The full subset of a `len`-element universe.
    pub fn full(len: usize) -> Self {
        let mut m = Mask::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    /// Collects an iterator of indices into a subset.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Mask::empty(len);
        for i in indices {
            m.insert(i);
        }
        m
    }

    /// Size of the universe this subset lives in (not the cardinality).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| *b == 0)
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Mask) -> Mask {
        debug_assert_eq!(self.len, other.len);
        Mask {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Mask) -> Mask {
        debug_assert_eq!(self.len, other.len);
        Mask {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Mask {
        let mut m = Mask::full(self.len);
        for (out, b) in m.blocks.iter_mut().zip(&self.blocks) {
            *out &= !b;
        }
        m
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|i| self.contains(*i))
    }
}
