//! Fixed-universe node sets stored as bit strings.
//!
//! All set algebra used by the closure operators (union, intersection,
//! difference, containment) runs word-parallel over `u64` blocks, so a
//! subsumption test costs `O(n / 64)` regardless of degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::NodeId;

const WORD_BITS: usize = 64;

/// A set of node indices drawn from a fixed universe `[0, universe)`.
///
/// The universe is fixed at construction. Queries and edits with indices at
/// or beyond the universe are contract violations and panic; they never
/// silently answer `false`. Two sets can be combined only when their
/// universes match.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    universe: usize,
    words: Vec<u64>,
}

impl NodeSet {
    /// The empty set over `[0, universe)`.
    pub fn empty(universe: usize) -> Self {
        NodeSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    /// The full set `{0, 1, …, universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut set = NodeSet::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let in_range = universe.saturating_sub(lo).min(WORD_BITS);
            if in_range == WORD_BITS {
                *word = u64::MAX;
            } else if in_range > 0 {
                *word = (1u64 << in_range) - 1;
            }
        }
        set
    }

    /// `{v}` over `[0, universe)`.
    pub fn singleton(universe: usize, v: NodeId) -> Self {
        let mut set = NodeSet::empty(universe);
        set.insert(v);
        set
    }

    pub fn from_iter<I: IntoIterator<Item = NodeId>>(universe: usize, nodes: I) -> Self {
        let mut set = NodeSet::empty(universe);
        for v in nodes {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    fn check(&self, v: NodeId) {
        assert!(
            v.index() < self.universe,
            "node {} outside universe [0, {})",
            v.index(),
            self.universe
        );
    }

    fn check_same_universe(&self, other: &NodeSet) {
        assert_eq!(
            self.universe, other.universe,
            "set universes differ ({} vs {})",
            self.universe, other.universe
        );
    }

    #[inline]
    pub fn contains(&self, v: NodeId) -> bool {
        self.check(v);
        self.words[v.index() / WORD_BITS] >> (v.index() % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`; returns whether it was newly added.
    pub fn insert(&mut self, v: NodeId) -> bool {
        self.check(v);
        let word = &mut self.words[v.index() / WORD_BITS];
        let bit = 1u64 << (v.index() % WORD_BITS);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    /// Removes `v`; returns whether it was present.
    pub fn remove(&mut self, v: NodeId) -> bool {
        self.check(v);
        let word = &mut self.words[v.index() / WORD_BITS];
        let bit = 1u64 << (v.index() % WORD_BITS);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &NodeSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &NodeSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<NodeId> {
        for (i, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(NodeId::new(i * WORD_BITS + word.trailing_zeros() as usize));
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl<'a> IntoIterator for &'a NodeSet {
    type Item = NodeId;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(NodeId::new(self.word_idx * WORD_BITS + bit))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.index())).finish()
    }
}
