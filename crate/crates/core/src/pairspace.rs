//! The search coordinates: the universe of independent edge pairs that may
//! cross, its ordering, and partial candidate solutions over it.

use crate::graph::{EdgeId, EdgeSet, Graph};

/// An ordered list of unordered independent edge pairs.
///
/// Pairs are stored as `(min, max)` and ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairUniverse {
    pairs: Vec<(EdgeId, EdgeId)>,
    by_edge: Vec<Vec<usize>>,
    restricted: bool,
}

impl PairUniverse {
    fn from_pairs(m: usize, pairs: Vec<(EdgeId, EdgeId)>, restricted: bool) -> Self {
        let mut by_edge = vec![Vec::new(); m];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            by_edge[a].push(i);
            by_edge[b].push(i);
        }
        Self { pairs, by_edge, restricted }
    }

    /// Length of the pair ordering.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.by_edge.len()
    }

    pub fn pair(&self, i: usize) -> (EdgeId, EdgeId) {
        self.pairs[i]
    }

    pub fn pairs(&self) -> &[(EdgeId, EdgeId)] {
        &self.pairs
    }

    /// Sorted positions of the pairs containing `e`.
    pub fn positions_of(&self, e: EdgeId) -> &[usize] {
        &self.by_edge[e]
    }

    /// Greatest position of a pair containing `e`, if any.
    pub fn last_position(&self, e: EdgeId) -> Option<usize> {
        self.by_edge[e].last().copied()
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    pub fn partner(&self, i: usize, e: EdgeId) -> EdgeId {
        let (a, b) = self.pairs[i];
        if a == e {
            b
        } else {
            a
        }
    }
}

/// All independent edge pairs of `g`, ordered lexicographically.
pub fn build_universe(g: &Graph) -> PairUniverse {
    let m = g.m();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if g.independent(a, b) {
                pairs.push((a, b));
            }
        }
    }
    PairUniverse::from_pairs(m, pairs, false)
}

/// The pairs of [`build_universe`] that contain at least one skew edge,
/// in the same relative order.
pub fn build_restricted_universe(g: &Graph, skew: &EdgeSet) -> PairUniverse {
    let m = g.m();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if (skew.contains(a) || skew.contains(b)) && g.independent(a, b) {
                pairs.push((a, b));
            }
        }
    }
    PairUniverse::from_pairs(m, pairs, true)
}

/// A prefix of a candidate solution: `bits[j]` says whether pair `j` crosses,
/// for `j < cursor`; later pairs are undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSolution<'u> {
    universe: &'u PairUniverse,
    bits: Vec<bool>,
}

impl<'u> PartialSolution<'u> {
    pub fn root(universe: &'u PairUniverse) -> Self {
        Self { universe, bits: Vec::new() }
    }

    /// Panics if `bits` is longer than the universe.
    pub fn from_bits(universe: &'u PairUniverse, bits: Vec<bool>) -> Self {
        assert!(bits.len() <= universe.k(), "prefix longer than the pair universe");
        Self { universe, bits }
    }

    /// The prefix followed by zeros up to the full length.
    pub fn completed_with_zeros(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.resize(self.universe.k(), false);
        Self { universe: self.universe, bits }
    }

    pub fn universe(&self) -> &'u PairUniverse {
        self.universe
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn cursor(&self) -> usize {
        self.bits.len()
    }

    pub fn is_complete(&self) -> bool {
        self.bits.len() == self.universe.k()
    }

    pub fn push(&mut self, bit: bool) {
        assert!(!self.is_complete(), "prefix already spans the universe");
        self.bits.push(bit);
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut c = self.clone();
        c.push(bit);
        c
    }

    /// True iff `self` is `other` or a descendant of it in the search tree.
    pub fn extends(&self, other: &PartialSolution<'_>) -> bool {
        self.cursor() >= other.cursor() && self.bits[..other.cursor()] == other.bits[..]
    }

    /// Pairs set to cross, in order.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| self.universe.pair(i))
    }

    /// How many chosen pairs each edge belongs to.
    pub fn crossings_per_edge(&self) -> Vec<u32> {
        let mut count = vec![0; self.universe.edge_count()];
        for (a, b) in self.crossing_pairs() {
            count[a] += 1;
            count[b] += 1;
        }
        count
    }
}

/// Edges occurring in some pair set to cross.
pub fn crossed_edges(y: &PartialSolution<'_>) -> EdgeSet {
    let mut s = EdgeSet::with_capacity(y.universe.edge_count());
    for (a, b) in y.crossing_pairs() {
        s.insert(a);
        s.insert(b);
    }
    s
}

/// Edges whose crossed status can no longer change in any admissible
/// extension of `y`:
/// (a) crossed in `y`;
/// (b) no pair containing the edge lies at or after the cursor (including
///     edges in no pair at all);
/// (c) every pair containing the edge has its other edge already crossed;
/// (d) the edge is in `kites`.
pub fn saturated_edges(y: &PartialSolution<'_>, kites: &EdgeSet) -> EdgeSet {
    let crossed = crossed_edges(y);
    saturated_with(y.universe, y.cursor(), &crossed, kites)
}

pub(crate) fn saturated_with(universe: &PairUniverse, cursor: usize, crossed: &EdgeSet, kites: &EdgeSet) -> EdgeSet {
    let m = universe.edge_count();
    let mut sat = crossed.clone();
    sat.union_with(kites);
    for e in 0..m {
        if sat.contains(e) {
            continue;
        }
        let positions = universe.positions_of(e);
        let done = match positions.last() {
            None => true,
            Some(&last) => last < cursor,
        };
        if done || positions.iter().all(|&i| crossed.contains(universe.partner(i, e))) {
            sat.insert(e);
        }
    }
    sat
}
