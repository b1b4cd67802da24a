//! Fixed-width vertex bitsets.
//!
//! Everything that walks subsets of vertices (clique search, completions,
//! refinement) is written against [`BitRow`], so the same code runs on a
//! single machine word for the search engine (`n <= 64`) and on the wide
//! [`VertexSet`] for large circulants.

use std::fmt;

/// Number of 64-bit words in a [`VertexSet`].
pub const WORDS: usize = 5;

/// Largest vertex count supported by [`VertexSet`] (and therefore by `Graph`).
pub const MAX_VERTICES: usize = WORDS * 64;

/// Operations shared by the single-word and multi-word bitsets.
pub trait BitRow: Copy + Eq + Ord + Default + fmt::Debug + Send + Sync {
    fn capacity() -> usize;
    fn is_empty(&self) -> bool;
    fn len(&self) -> usize;
    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    /// Smallest member.
    fn first(&self) -> Option<usize>;

    fn singleton(v: usize) -> Self {
        let mut s = Self::default();
        s.insert(v);
        s
    }

    /// The set `{0, .., n-1}`.
    fn full(n: usize) -> Self {
        let mut s = Self::default();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Remove and return the smallest member.
    fn pop_first(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }

    fn ones(&self) -> Ones<Self> {
        Ones { rest: *self }
    }
}

/// Iterator over the members of a bitset in increasing order.
pub struct Ones<B: BitRow> {
    rest: B,
}

impl<B: BitRow> Iterator for Ones<B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        self.rest.pop_first()
    }
}

impl BitRow for u64 {
    #[inline]
    fn capacity() -> usize {
        64
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        (*self >> v) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    #[inline]
    fn or(&self, other: &Self) -> Self {
        self | other
    }
    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
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
    fn pop_first(&mut self) -> Option<usize> {
        if *self == 0 {
            return None;
        }
        let v = self.trailing_zeros() as usize;
        *self &= *self - 1;
        Some(v)
    }
}

/// A set of vertex indices below [`MAX_VERTICES`].
///
/// Ordering is by the sorted member list, so the smallest set in `Ord`
/// is the lexicographically smallest one among sets of equal size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_word(w: u64) -> Self {
        let mut words = [0; WORDS];
        words[0] = w;
        VertexSet { words }
    }

    /// Low word; exact when every member is below 64.
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    pub fn words(&self) -> &[u64; WORDS] {
        &self.words
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.ones().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.and_not(other).is_empty()
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate().rev() {
            if *w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ones().cmp(other.ones())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.ones().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl BitRow for VertexSet {
    fn capacity() -> usize {
        MAX_VERTICES
    }
    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        (self.words[v / 64] >> (v % 64)) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }
    #[inline]
    fn and(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        VertexSet { words }
    }
    #[inline]
    fn or(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        VertexSet { words }
    }
    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        VertexSet { words }
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}
