//! Planarity testing with embedding extraction, and face counting on
//! rotation systems.
//!
//! The tester is the left-right criterion of de Fraysseix and Rosenstiehl in
//! the formulation of Brandes ("The Left-Right Planarity Test"): a DFS
//! orientation computes lowpoints and nesting depths, a second DFS resolves
//! left/right constraints on a stack of conflict pairs, and a third DFS lays
//! out the rotation system from the resolved sides.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

/// Per-vertex cyclic order of incident edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RotationSystem {
    rotations: Vec<Vec<EdgeId>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<EdgeId>>) -> Self {
        Self { rotations }
    }

    pub fn at(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotations
    }

    pub fn into_inner(self) -> Vec<Vec<EdgeId>> {
        self.rotations
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// Present iff `planar`.
    pub embedding: Option<RotationSystem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("rotation covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    InconsistentRotation(VertexId),
}

/// Number of faces traced by the rotation system (successor of the reversed
/// dart). Every component contributes its own outer face.
pub fn count_faces(g: &Graph, rs: &RotationSystem) -> Result<usize, RotationError> {
    if rs.vertex_count() != g.n() {
        return Err(RotationError::VertexCount { expected: g.n(), found: rs.vertex_count() });
    }
    // slot[dart] = position of the dart within its tail's rotation, where
    // dart 2e leaves the first endpoint of e and 2e+1 leaves the second.
    let mut slot = vec![usize::MAX; 2 * g.m()];
    for v in 0..g.n() {
        let rot = rs.at(v);
        if rot.len() != g.degree(v) {
            return Err(RotationError::InconsistentRotation(v));
        }
        for (i, &e) in rot.iter().enumerate() {
            if e >= g.m() {
                return Err(RotationError::InconsistentRotation(v));
            }
            let (a, b) = g.endpoints(e);
            let d = if a == v {
                2 * e
            } else if b == v {
                2 * e + 1
            } else {
                return Err(RotationError::InconsistentRotation(v));
            };
            if slot[d] != usize::MAX {
                return Err(RotationError::InconsistentRotation(v));
            }
            slot[d] = i;
        }
    }

    let mut visited = vec![false; 2 * g.m()];
    let mut faces = 0;
    for start in 0..2 * g.m() {
        if visited[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !visited[d] {
            visited[d] = true;
            let e = d / 2;
            let (a, b) = g.endpoints(e);
            let head = if d % 2 == 0 { b } else { a };
            // reversed dart sits at `head`; continue with its successor
            let back = d ^ 1;
            let rot = rs.at(head);
            let next_edge = rot[(slot[back] + 1) % rot.len()];
            let (x, _) = g.endpoints(next_edge);
            d = if x == head { 2 * next_edge } else { 2 * next_edge + 1 };
        }
    }
    Ok(faces)
}

/// True iff the rotation system is a planar embedding: every connected
/// component with edges satisfies `V - E + F = 2` (with `F` the traced faces),
/// i.e. globally `V' - E + F = 2C` over the `C` non-trivial components and the
/// `V'` non-isolated vertices.
pub fn euler_check(g: &Graph, rs: &RotationSystem) -> Result<bool, RotationError> {
    let faces = count_faces(g, rs)?;
    let vertices = (0..g.n()).filter(|&v| g.degree(v) > 0).count();
    let components = g.nontrivial_components();
    Ok(vertices + faces == g.m() + 2 * components)
}

/// Tests planarity; on success also returns a planar rotation system.
pub fn test_planarity(g: &Graph) -> PlanarityVerdict {
    match LrPlanarity::new(g).run(true) {
        Some(rs) => {
            debug_assert_eq!(euler_check(g, &rs), Ok(true));
            PlanarityVerdict { planar: true, embedding: Some(rs) }
        }
        None => PlanarityVerdict { planar: false, embedding: None },
    }
}

/// Planarity answer alone; skips building the embedding.
pub fn is_planar(g: &Graph) -> bool {
    LrPlanarity::new(g).run(false).is_some()
}

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Self { low: Some(e), high: Some(e) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    /// Identity of the pair; stack bottoms are recorded by identity.
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrPlanarity<'g> {
    g: &'g Graph,
    height: Vec<usize>,
    parent_edge: Vec<Option<EdgeId>>,
    oriented: Vec<bool>,
    /// Head of each oriented edge (its tail is the other endpoint).
    target: Vec<VertexId>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out_edges: Vec<Vec<EdgeId>>,
    roots: Vec<VertexId>,
    reference: Vec<Option<EdgeId>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<Option<u64>>,
    lowpt_edge: Vec<EdgeId>,
    next_pair_id: u64,
}

impl<'g> LrPlanarity<'g> {
    fn new(g: &'g Graph) -> Self {
        let (n, m) = (g.n(), g.m());
        Self {
            g,
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            oriented: vec![false; m],
            target: vec![NONE; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            roots: Vec::new(),
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![None; m],
            lowpt_edge: vec![NONE; m],
            next_pair_id: 0,
        }
    }

    fn source(&self, e: EdgeId) -> VertexId {
        self.g.opposite(e, self.target[e])
    }

    /// `None` if nonplanar. With `embed == false` a planar graph yields an
    /// empty rotation system.
    fn run(mut self, embed: bool) -> Option<RotationSystem> {
        let (n, m) = (self.g.n(), self.g.m());
        if n > 2 && m > 3 * n - 6 {
            return None;
        }

        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }

        for v in 0..n {
            let mut adj = std::mem::take(&mut self.out_edges[v]);
            adj.sort_by_key(|&e| self.nesting_depth[e]);
            self.out_edges[v] = adj;
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.test(r) {
                return None;
            }
        }
        if !embed {
            return Some(RotationSystem::default());
        }

        for e in 0..m {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        for v in 0..n {
            let mut adj = std::mem::take(&mut self.out_edges[v]);
            adj.sort_by_key(|&e| self.nesting_depth[e]);
            self.out_edges[v] = adj;
        }

        let mut layout = RotationBuilder::new(self.g);
        for v in 0..n {
            let mut previous = None;
            for &e in &self.out_edges[v] {
                let d = layout.dart(v, e);
                match previous {
                    None => layout.insert(v, d, Anchor::Alone),
                    Some(p) => layout.insert(v, d, Anchor::ClockwiseAfter(p)),
                }
                previous = Some(d);
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.embed(r, &mut layout, &mut left_ref, &mut right_ref);
        }
        Some(layout.finish())
    }

    fn orient(&mut self, v: VertexId) {
        let parent = self.parent_edge[v];
        for i in 0..self.g.degree(v) {
            let e = self.g.incident(v)[i];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            let w = self.g.opposite(e, v);
            self.target[e] = w;
            self.out_edges[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }

            self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < self.height[v] {
                // chordal
                self.nesting_depth[e] += 1;
            }

            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.next_pair_id += 1;
        ConflictPair { id: self.next_pair_id, left, right }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn test(&mut self, v: VertexId) -> bool {
        let parent = self.parent_edge[v];
        for i in 0..self.out_edges[v].len() {
            let ei = self.out_edges[v][i];
            let w = self.target[ei];
            self.stack_bottom[ei] = self.top_id();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                let p = self.new_pair(Interval::default(), Interval::single(ei));
                self.stack.push(p);
            }

            if self.lowpt[ei] < self.height[v] {
                // v is not a root here, so the parent edge exists
                let e = parent.expect("return edge below a DFS root");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = self.new_pair(Interval::default(), Interval::default());
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.reference[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.source(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }

        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high {
                if self.target[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high {
                if self.target[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }

        // side of e is the side of a highest return edge
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    /// Resolves the relative side of `e` into an absolute one.
    fn sign(&mut self, e: EdgeId) -> i64 {
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.reference[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut resolved = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= resolved;
            self.reference[x] = None;
            resolved = self.side[x];
        }
        self.side[e]
    }

    fn embed(&self, v: VertexId, layout: &mut RotationBuilder, left_ref: &mut [usize], right_ref: &mut [usize]) {
        for &ei in &self.out_edges[v] {
            let w = self.target[ei];
            if self.parent_edge[w] == Some(ei) {
                let d = layout.dart(w, ei);
                layout.insert_leftmost(w, d);
                left_ref[v] = layout.dart(v, ei);
                right_ref[v] = layout.dart(v, ei);
                self.embed(w, layout, left_ref, right_ref);
            } else {
                let d = layout.dart(w, ei);
                if self.side[ei] == 1 {
                    layout.insert(w, d, Anchor::ClockwiseAfter(right_ref[w]));
                } else {
                    layout.insert(w, d, Anchor::CounterClockwiseBefore(left_ref[w]));
                    left_ref[w] = d;
                }
            }
        }
    }
}

enum Anchor {
    Alone,
    /// New dart becomes the clockwise successor of the reference.
    ClockwiseAfter(usize),
    /// New dart becomes the counter-clockwise predecessor of the reference.
    CounterClockwiseBefore(usize),
}

/// Doubly linked cyclic rotations over darts (`2e` at the first endpoint of
/// `e`, `2e+1` at the second), tracking a leftmost dart per vertex.
struct RotationBuilder<'g> {
    g: &'g Graph,
    cw: Vec<usize>,
    ccw: Vec<usize>,
    leftmost: Vec<usize>,
}

impl<'g> RotationBuilder<'g> {
    fn new(g: &'g Graph) -> Self {
        Self { g, cw: vec![NONE; 2 * g.m()], ccw: vec![NONE; 2 * g.m()], leftmost: vec![NONE; g.n()] }
    }

    fn dart(&self, v: VertexId, e: EdgeId) -> usize {
        if self.g.endpoints(e).0 == v {
            2 * e
        } else {
            2 * e + 1
        }
    }

    fn insert(&mut self, v: VertexId, d: usize, anchor: Anchor) {
        let anchor = if self.leftmost[v] == NONE { Anchor::Alone } else { anchor };
        match anchor {
            Anchor::Alone => {
                self.cw[d] = d;
                self.ccw[d] = d;
                self.leftmost[v] = d;
            }
            Anchor::ClockwiseAfter(r) => {
                let next = self.cw[r];
                self.cw[r] = d;
                self.ccw[d] = r;
                self.cw[d] = next;
                self.ccw[next] = d;
            }
            Anchor::CounterClockwiseBefore(r) => {
                let prev = self.ccw[r];
                self.ccw[r] = d;
                self.cw[d] = r;
                self.ccw[d] = prev;
                self.cw[prev] = d;
                if self.leftmost[v] == r {
                    self.leftmost[v] = d;
                }
            }
        }
    }

    fn insert_leftmost(&mut self, v: VertexId, d: usize) {
        let l = self.leftmost[v];
        self.insert(v, d, Anchor::CounterClockwiseBefore(l));
    }

    fn finish(self) -> RotationSystem {
        let rotations = (0..self.g.n())
            .map(|v| {
                let start = self.leftmost[v];
                let mut rot = Vec::with_capacity(self.g.degree(v));
                if start != NONE {
                    let mut d = start;
                    loop {
                        rot.push(d / 2);
                        d = self.cw[d];
                        if d == start {
                            break;
                        }
                    }
                }
                rot
            })
            .collect();
        RotationSystem { rotations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Brute force: a graph is planar iff some rotation system passes the
    /// Euler check. Only usable for tiny graphs.
    pub(crate) fn brute_force_planar(g: &Graph) -> bool {
        fn perms(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
            // fix the first element; cyclic orders only
            if items.len() <= 2 {
                return vec![items.to_vec()];
            }
            let mut out = Vec::new();
            let (first, rest) = items.split_first().unwrap();
            let mut rest = rest.to_vec();
            permute(&mut rest, 0, &mut |p| {
                let mut v = vec![*first];
                v.extend_from_slice(p);
                out.push(v);
            });
            out
        }
        fn permute(xs: &mut Vec<EdgeId>, k: usize, f: &mut dyn FnMut(&[EdgeId])) {
            if k == xs.len() {
                f(xs);
                return;
            }
            for i in k..xs.len() {
                xs.swap(k, i);
                permute(xs, k + 1, f);
                xs.swap(k, i);
            }
        }
        let options: Vec<Vec<Vec<EdgeId>>> = (0..g.n()).map(|v| perms(g.incident(v))).collect();
        let mut choice = vec![0usize; g.n()];
        loop {
            let rs = RotationSystem::new((0..g.n()).map(|v| options[v][choice[v]].clone()).collect());
            if euler_check(g, &rs).unwrap() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == g.n() {
                    return false;
                }
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    fn assert_certified(g: &Graph) -> bool {
        let verdict = test_planarity(g);
        assert_eq!(verdict.planar, verdict.embedding.is_some());
        if let Some(rs) = &verdict.embedding {
            assert_eq!(euler_check(g, rs), Ok(true));
        }
        verdict.planar
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(assert_certified(&generators::complete(4)));
        assert!(!assert_certified(&generators::complete(5)));
        assert!(!assert_certified(&generators::complete_bipartite(3, 3)));
    }

    #[test]
    fn c6_with_long_diagonals() {
        // C6 plus the three long diagonals is K_{3,3}.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(assert_certified(&g), brute_force_planar(&g));
        assert!(!brute_force_planar(&g));
    }

    #[test]
    fn euler_k4_faces() {
        let g = generators::complete(4);
        let rs = test_planarity(&g).embedding.unwrap();
        assert_eq!(count_faces(&g, &rs), Ok(4));
        assert_eq!(euler_check(&g, &rs), Ok(true));
    }

    #[test]
    fn euler_k4_toroidal_rotation() {
        // Found by enumerating all 2^4 rotation systems of K4: reversing the
        // cyclic order at one vertex of a planar rotation leaves F=2.
        let g = generators::complete(4);
        let planar = test_planarity(&g).embedding.unwrap();
        let mut rots = planar.into_inner();
        rots[0].swap(1, 2);
        let rs = RotationSystem::new(rots);
        assert_eq!(count_faces(&g, &rs), Ok(2));
        assert_eq!(euler_check(&g, &rs), Ok(false));
    }

    #[test]
    fn euler_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let rs = RotationSystem::new(vec![vec![0], vec![0]]);
        assert_eq!(count_faces(&g, &rs), Ok(1));
        assert_eq!(euler_check(&g, &rs), Ok(true));
    }

    #[test]
    fn euler_rejects_inconsistent_rotation() {
        let g = generators::complete(4);
        let mut rots = test_planarity(&g).embedding.unwrap().into_inner();
        rots[2].pop();
        assert_eq!(euler_check(&g, &RotationSystem::new(rots)), Err(RotationError::InconsistentRotation(2)));
    }

    #[test]
    fn disconnected_and_isolated() {
        let g = Graph::new(9, &[(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 7), (7, 4), (4, 6)]).unwrap();
        assert!(assert_certified(&g));
        let rs = test_planarity(&g).embedding.unwrap();
        assert!(rs.at(3).is_empty() && rs.at(8).is_empty());

        let mut edges = generators::complete(5).edges().to_vec();
        edges.extend([(5, 6), (6, 7)]);
        let g = Graph::new(8, &edges).unwrap();
        assert!(!assert_certified(&g));
    }

    #[test]
    fn grid_and_maximal_planar() {
        assert!(assert_certified(&generators::grid(5, 10)));
        // Goldner-Harary graph, maximal planar on 11 vertices
        let edges = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 7),
            (1, 8),
            (1, 10),
            (1, 11),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 10),
            (2, 11),
            (3, 4),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 8),
            (7, 9),
            (7, 10),
            (8, 10),
            (9, 10),
            (10, 11),
        ];
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        assert!(assert_certified(&Graph::new(11, &edges).unwrap()));
    }

    #[test]
    fn nonplanar_without_obvious_kuratowski() {
        let edges = [(1, 5), (1, 6), (1, 7), (2, 6), (2, 3), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7)];
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        assert!(!assert_certified(&Graph::new(7, &edges).unwrap()));
    }
}
