//! Simple undirected graphs with dense vertex and edge ids, plus the
//! biconnected-component (block) decomposition.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A set of edge ids, indexed densely by [`EdgeId`].
pub type EdgeSet = FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// A simple undirected graph.
///
/// Vertices are `0..n`, edges are `0..m` in construction order. Each edge
/// keeps its endpoints in the order they were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    /// Incident edges of `v` are `incidence[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    incidence: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge(u, v));
            }
        }
        Ok(Self::from_simple_edges(n, edge_list.to_vec()))
    }

    /// Builds a graph whose edge list is already known to be simple.
    pub(crate) fn from_simple_edges(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut offsets = vec![0; n + 1];
        for &(u, v) in &edges {
            debug_assert!(u != v && u < n && v < n);
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut incidence = vec![0; 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                incidence[fill[x]] = e;
                fill[x] += 1;
            }
        }
        Self { edges, offsets, incidence }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Incident edges of `v`, in increasing edge-id order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (x, y) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.incident(x).iter().copied().find(|&e| self.opposite(e, x) == y)
    }

    /// Two edges are independent when they share no endpoint.
    pub fn independent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a != c && a != d && b != c && b != d
    }

    pub fn edge_set(&self) -> EdgeSet {
        let mut s = EdgeSet::with_capacity(self.m());
        s.insert_range(..);
        s
    }

    /// Normalized `(min, max)` endpoint pairs, sorted. Handy for comparing
    /// edge sets independently of edge ids.
    pub fn normalized_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        out.sort_unstable();
        out
    }

    /// Number of connected components that contain at least one edge.
    pub fn nontrivial_components(&self) -> usize {
        let labels = self.component_labels();
        let mut seen = BTreeSet::new();
        for &(u, _) in &self.edges {
            seen.insert(labels[u]);
        }
        seen.len()
    }

    /// Connected-component label per vertex; labels are `0..c` in order of
    /// the smallest vertex in each component.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        let mut stack = Vec::new();
        for root in 0..self.n() {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &e in self.incident(v) {
                    let w = self.opposite(e, v);
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_labels().iter().all(|&c| c == 0)
    }

    /// Splits the graph into its connected components. Each entry maps local
    /// vertex ids back to `self`'s ids; edges keep their relative order.
    pub fn connected_components(&self) -> Vec<(Graph, Vec<VertexId>)> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |c| c + 1);
        let mut vertices = vec![Vec::new(); count];
        let mut local = vec![0; self.n()];
        for v in 0..self.n() {
            local[v] = vertices[labels[v]].len();
            vertices[labels[v]].push(v);
        }
        let mut edges = vec![Vec::new(); count];
        for &(u, v) in &self.edges {
            edges[labels[u]].push((local[u], local[v]));
        }
        vertices.into_iter().zip(edges).map(|(vs, es)| (Graph::from_simple_edges(vs.len(), es), vs)).collect()
    }
}

/// One biconnected component of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// Block vertex id -> original vertex id (increasing).
    pub vertex_map: Vec<VertexId>,
    /// Block edge id -> original edge id (increasing).
    pub edge_map: Vec<EdgeId>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.graph.m() == 1
    }

    /// Block-local id of an original vertex, if the block contains it.
    pub fn local_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map.binary_search(&v).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest original edge id.
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// Incidences `(block index, cut vertex)` of the block-cut tree.
    pub block_tree: Vec<(usize, VertexId)>,
}

/// Hopcroft–Tarjan block decomposition with an explicit edge stack.
///
/// Works on disconnected inputs too (one block forest per component);
/// isolated vertices belong to no block.
pub fn biconnected_components(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut cut = vec![false; n];

    // (vertex, parent edge, next incident index)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, None, 0));
        while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
            if let Some(&e) = g.incident(v).get(*next) {
                *next += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.opposite(e, v);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let Some(pe) = parent_edge else { continue };
                let p = g.opposite(pe, v);
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    if p != root {
                        cut[p] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }

    for b in &mut raw_blocks {
        b.sort_unstable();
    }
    raw_blocks.sort_unstable_by_key(|b| b[0]);

    let cut_vertices: BTreeSet<VertexId> = (0..n).filter(|&v| cut[v]).collect();
    let mut block_tree = Vec::new();
    let blocks = raw_blocks
        .into_iter()
        .enumerate()
        .map(|(i, edge_map)| {
            let mut vertex_map: Vec<VertexId> = edge_map
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            vertex_map.sort_unstable();
            vertex_map.dedup();
            let local = |x: VertexId| vertex_map.binary_search(&x).unwrap();
            let edges = edge_map
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    (local(u), local(v))
                })
                .collect();
            let graph = Graph::from_simple_edges(vertex_map.len(), edges);
            block_tree.extend(vertex_map.iter().filter(|v| cut_vertices.contains(v)).map(|&v| (i, v)));
            Block { graph, vertex_map, edge_map }
        })
        .collect();

    BlockDecomposition { blocks, cut_vertices, block_tree }
}
