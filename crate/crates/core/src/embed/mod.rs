//! Planarizations and 1-planar embeddings.
//!
//! A 1-planar embedding is stored as a planar rotation system of its
//! planarization: every crossing becomes a degree-4 dummy vertex whose four
//! incident "halves" lead back to the endpoints of the two crossing edges.

mod merge;
mod text;
mod validate;

pub use merge::merge_blocks;
pub use text::{parse_embedding, write_embedding, FormatError};
pub use validate::validate;

use thiserror::Error;

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::planarity::{euler_check, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("edge {0} appears in more than one crossing pair")]
    EdgeCrossedTwice(EdgeId),
    #[error("edges {0} and {1} share an endpoint and cannot cross")]
    AdjacentPair(EdgeId, EdgeId),
    #[error("rotation system is not a planar embedding of the planarization")]
    NotPlanarRotation,
    #[error("embedding of block {0} does not validate")]
    InvalidBlockEmbedding(usize),
    #[error("expected {expected} block embeddings, got {found}")]
    BlockCount { expected: usize, found: usize },
}

/// A crossing replaced by a dummy vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dummy {
    /// The crossing edges `(e1, e2)`.
    pub edges: (EdgeId, EdgeId),
    /// Endpoints `[u1, v1, u2, v2]` with `e1 = (u1, v1)`, `e2 = (u2, v2)`.
    pub ends: [VertexId; 4],
}

impl Dummy {
    /// The original edge a half belongs to.
    pub fn edge_of_half(&self, half: u8) -> EdgeId {
        if half < 2 {
            self.edges.0
        } else {
            self.edges.1
        }
    }
}

/// What an edge of the planarized graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarEdge {
    /// An uncrossed original edge.
    Original(EdgeId),
    /// Half `half` (0..4, in `ends` order) of the edges through dummy `dummy`.
    Half { dummy: usize, half: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarization {
    /// Original vertices `0..n`, then dummy `k` as vertex `n + k`.
    pub star_graph: Graph,
    pub original_n: usize,
    pub dummies: Vec<Dummy>,
    /// Star edge id -> meaning.
    pub star_edges: Vec<StarEdge>,
    /// Original edge id -> star edge id, for uncrossed edges that are present.
    original_to_star: Vec<Option<EdgeId>>,
}

impl Planarization {
    /// Planarizes the edges of `g` selected by `include` (all when `None`),
    /// replacing every pair in `crossings` by a dummy vertex.
    ///
    /// Star edges: the uncrossed included edges in increasing id order, then
    /// four halves per dummy.
    pub(crate) fn build(
        g: &Graph,
        crossings: &[(EdgeId, EdgeId)],
        include: Option<&EdgeSet>,
    ) -> Result<Self, EmbedError> {
        let n = g.n();
        let mut crossed = vec![false; g.m()];
        let mut dummies = Vec::with_capacity(crossings.len());
        for &(a, b) in crossings {
            if a == b || !g.independent(a, b) {
                return Err(EmbedError::AdjacentPair(a, b));
            }
            for e in [a, b] {
                if std::mem::replace(&mut crossed[e], true) {
                    return Err(EmbedError::EdgeCrossedTwice(e));
                }
            }
            let (u1, v1) = g.endpoints(a);
            let (u2, v2) = g.endpoints(b);
            dummies.push(Dummy { edges: (a, b), ends: [u1, v1, u2, v2] });
        }

        let mut edges = Vec::with_capacity(g.m() + 2 * dummies.len());
        let mut star_edges = Vec::with_capacity(edges.capacity());
        let mut original_to_star = vec![None; g.m()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if crossed[e] || include.is_some_and(|s| !s.contains(e)) {
                continue;
            }
            original_to_star[e] = Some(edges.len());
            edges.push((u, v));
            star_edges.push(StarEdge::Original(e));
        }
        for (k, d) in dummies.iter().enumerate() {
            for (h, &end) in d.ends.iter().enumerate() {
                edges.push((end, n + k));
                star_edges.push(StarEdge::Half { dummy: k, half: h as u8 });
            }
        }
        Ok(Self {
            star_graph: Graph::from_simple_edges(n + dummies.len(), edges),
            original_n: n,
            dummies,
            star_edges,
            original_to_star,
        })
    }

    pub fn dummy_vertex(&self, k: usize) -> VertexId {
        self.original_n + k
    }

    /// Star edge id of the uncrossed original edge `e`.
    pub fn star_edge_of(&self, e: EdgeId) -> Option<EdgeId> {
        self.original_to_star.get(e).copied().flatten()
    }

    /// Star edge id of half `half` of dummy `k`.
    pub fn half_edge(&self, k: usize, half: u8) -> EdgeId {
        let plain = self.star_edges.len() - 4 * self.dummies.len();
        plain + 4 * k + half as usize
    }

    /// The original edge a star edge comes from.
    pub fn origin(&self, s: EdgeId) -> EdgeId {
        match self.star_edges[s] {
            StarEdge::Original(e) => e,
            StarEdge::Half { dummy, half } => self.dummies[dummy].edge_of_half(half),
        }
    }

    pub fn crossings(&self) -> Vec<(EdgeId, EdgeId)> {
        self.dummies.iter().map(|d| d.edges).collect()
    }
}

/// Replaces each crossing pair by a dummy vertex.
pub fn planarize(g: &Graph, crossings: &[(EdgeId, EdgeId)]) -> Result<Planarization, EmbedError> {
    Planarization::build(g, crossings, None)
}

/// A 1-planar embedding: a planar rotation system of the planarization in
/// which every dummy is a genuine crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlanarEmbedding {
    pub planarization: Planarization,
    pub rotation: RotationSystem,
    pub crossings: Vec<(EdgeId, EdgeId)>,
}

impl OnePlanarEmbedding {
    /// Zero-crossing embedding from a planar rotation system of `g`.
    pub fn from_planar(g: &Graph, rotation: RotationSystem) -> Self {
        let planarization = Planarization::build(g, &[], None).expect("no crossings");
        Self { planarization, rotation, crossings: Vec::new() }
    }

    pub fn count_crossings(&self) -> usize {
        self.crossings.len()
    }
}

pub fn count_crossings(emb: &OnePlanarEmbedding) -> usize {
    emb.count_crossings()
}

/// Turns a planar rotation system of a planarization into a 1-planar
/// embedding.
///
/// A dummy whose rotation alternates the halves of its two edges is kept as
/// a crossing. Otherwise the two halves of each edge are consecutive around
/// the dummy, so both edges can be rerouted around it without crossing: the
/// dummy is dropped and each endpoint's half is replaced in place by the
/// rerouted original edge.
pub fn realize(p: &Planarization, rs: &RotationSystem) -> Result<OnePlanarEmbedding, EmbedError> {
    if !euler_check(&p.star_graph, rs).unwrap_or(false) {
        return Err(EmbedError::NotPlanarRotation);
    }

    let keep: Vec<bool> = (0..p.dummies.len())
        .map(|k| {
            let rot = rs.at(p.dummy_vertex(k));
            let half_at = |i: usize| match p.star_edges[rot[i % 4]] {
                StarEdge::Half { half, .. } => half,
                StarEdge::Original(_) => unreachable!("dummy incident to an original edge"),
            };
            let start = (0..4).find(|&i| half_at(i) == 0).expect("u1 half present");
            // alternating iff the v1 half sits opposite the u1 half
            half_at(start + 2) == 1
        })
        .collect();

    let kept: Vec<(EdgeId, EdgeId)> = p.dummies.iter().zip(&keep).filter(|(_, &k)| k).map(|(d, _)| d.edges).collect();
    let mut renumber = vec![usize::MAX; p.dummies.len()];
    for (new, old) in (0..p.dummies.len()).filter(|&k| keep[k]).enumerate() {
        renumber[old] = new;
    }

    let g = original_graph(p);
    let out = Planarization::build(&g, &kept, None)?;
    let map_edge = |s: EdgeId| -> EdgeId {
        match p.star_edges[s] {
            StarEdge::Original(e) => out.star_edge_of(e).expect("uncrossed edge survives"),
            StarEdge::Half { dummy, half } if keep[dummy] => out.half_edge(renumber[dummy], half),
            StarEdge::Half { dummy, half } => {
                out.star_edge_of(p.dummies[dummy].edge_of_half(half)).expect("rerouted edge is uncrossed")
            }
        }
    };

    let mut rotations = Vec::with_capacity(out.star_graph.n());
    for v in 0..p.original_n {
        rotations.push(rs.at(v).iter().map(|&s| map_edge(s)).collect());
    }
    for k in (0..p.dummies.len()).filter(|&k| keep[k]) {
        rotations.push(rs.at(p.dummy_vertex(k)).iter().map(|&s| map_edge(s)).collect());
    }
    let rotation = RotationSystem::new(rotations);
    debug_assert_eq!(euler_check(&out.star_graph, &rotation), Ok(true));
    Ok(OnePlanarEmbedding { planarization: out, rotation, crossings: kept })
}

/// Rebuilds the original graph from a planarization.
fn original_graph(p: &Planarization) -> Graph {
    let m = p.star_edges.len() - 2 * p.dummies.len();
    let mut edges = vec![(0, 0); m];
    for (s, kind) in p.star_edges.iter().enumerate() {
        if let StarEdge::Original(e) = *kind {
            edges[e] = p.star_graph.endpoints(s);
        }
    }
    for d in &p.dummies {
        edges[d.edges.0] = (d.ends[0], d.ends[1]);
        edges[d.edges.1] = (d.ends[2], d.ends[3]);
    }
    Graph::from_simple_edges(p.original_n, edges)
}
