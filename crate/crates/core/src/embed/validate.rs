//! Certificate checking. Everything here works from the raw star graph and
//! rotation lists and shares no code with the search or with `realize`.

use std::collections::HashMap;

use super::OnePlanarEmbedding;
use crate::graph::{Graph, VertexId};

/// True iff `emb` is a 1-planar embedding of exactly `g`.
pub fn validate(g: &Graph, emb: &OnePlanarEmbedding) -> bool {
    let star = &emb.planarization.star_graph;
    let n = g.n();
    if star.n() != n + emb.crossings.len() || emb.planarization.original_n != n {
        return false;
    }

    // crossing pairs: independent edges of g, each edge crossed at most once
    let mut crossed = vec![false; g.m()];
    for &(a, b) in &emb.crossings {
        if a >= g.m() || b >= g.m() || a == b {
            return false;
        }
        let (ua, va) = g.endpoints(a);
        let (ub, vb) = g.endpoints(b);
        if ua == ub || ua == vb || va == ub || va == vb {
            return false;
        }
        for e in [a, b] {
            if crossed[e] {
                return false;
            }
            crossed[e] = true;
        }
    }

    // rebuild g: uncrossed edges between original vertices, crossed edges
    // from the neighbours of their dummy
    let mut rebuilt = Vec::with_capacity(g.m());
    for &(u, v) in star.edges() {
        match (u < n, v < n) {
            (true, true) => rebuilt.push((u.min(v), u.max(v))),
            (false, false) => return false,
            _ => {}
        }
    }
    let mut side_of: Vec<HashMap<VertexId, u8>> = Vec::with_capacity(emb.crossings.len());
    for (k, &(a, b)) in emb.crossings.iter().enumerate() {
        let d = n + k;
        let mut nbrs: Vec<VertexId> = star
            .incident(d)
            .iter()
            .map(|&s| {
                let (x, y) = star.endpoints(s);
                if x == d {
                    y
                } else {
                    x
                }
            })
            .collect();
        nbrs.sort_unstable();
        let (ua, va) = g.endpoints(a);
        let (ub, vb) = g.endpoints(b);
        let mut want = vec![ua, va, ub, vb];
        want.sort_unstable();
        if nbrs != want {
            return false;
        }
        rebuilt.push((ua.min(va), ua.max(va)));
        rebuilt.push((ub.min(vb), ub.max(vb)));
        side_of.push(HashMap::from([(ua, 0), (va, 0), (ub, 1), (vb, 1)]));
    }
    rebuilt.sort_unstable();
    let mut expected: Vec<(VertexId, VertexId)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    expected.sort_unstable();
    if rebuilt != expected {
        return false;
    }

    // rotation: a permutation of the incident edges at every vertex
    let rot = emb.rotation.rotations();
    if rot.len() != star.n() {
        return false;
    }
    let mut position = vec![[usize::MAX; 2]; star.m()];
    for (v, cycle) in rot.iter().enumerate() {
        let mut listed = cycle.clone();
        listed.sort_unstable();
        let mut incident = star.incident(v).to_vec();
        incident.sort_unstable();
        if listed != incident {
            return false;
        }
        for (i, &s) in cycle.iter().enumerate() {
            let side = usize::from(star.endpoints(s).0 != v);
            position[s][side] = i;
        }
    }

    // every dummy alternates the halves of its two edges
    for (k, sides) in side_of.iter().enumerate() {
        let d = n + k;
        let pattern: Vec<u8> = rot[d]
            .iter()
            .map(|&s| {
                let (x, y) = star.endpoints(s);
                sides[&if x == d { y } else { x }]
            })
            .collect();
        if pattern[0] == pattern[1] || pattern[1] == pattern[2] || pattern[2] == pattern[3] {
            return false;
        }
    }

    euler_holds(star, rot, &position)
}

/// Traces all faces and checks `V - E + F = 2` on each component that has
/// edges.
fn euler_holds(star: &Graph, rot: &[Vec<usize>], position: &[[usize; 2]]) -> bool {
    let m = star.m();
    // dart 2s goes from endpoints(s).0 to .1, dart 2s+1 the other way
    let mut seen = vec![false; 2 * m];
    let mut faces = 0usize;
    for start in 0..2 * m {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut dart = start;
        while !seen[dart] {
            seen[dart] = true;
            let s = dart / 2;
            let (x, y) = star.endpoints(s);
            let head = if dart % 2 == 0 { y } else { x };
            let at_head = position[s][usize::from(head != x)];
            let cycle = &rot[head];
            let next = cycle[(at_head + 1) % cycle.len()];
            dart = 2 * next + usize::from(star.endpoints(next).0 != head);
        }
    }

    // union-find over vertices for the component count
    let mut parent: Vec<usize> = (0..star.n()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(u, v) in star.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru] = rv;
    }
    let touched: Vec<usize> = (0..star.n()).filter(|&v| star.degree(v) > 0).collect();
    let mut roots: Vec<usize> = touched.iter().map(|&v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();

    touched.len() + faces == m + 2 * roots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{planarize, OnePlanarEmbedding};
    use crate::generators;
    use crate::planarity::{test_planarity, RotationSystem};

    #[test]
    fn planar_zero_crossing_embedding() {
        let g = generators::grid(4, 4);
        let rs = test_planarity(&g).embedding.unwrap();
        assert!(validate(&g, &OnePlanarEmbedding::from_planar(&g, rs)));
    }

    #[test]
    fn corrupted_rotation_rejected() {
        let g = generators::complete(4);
        let mut rots = test_planarity(&g).embedding.unwrap().into_inner();
        rots[0].swap(0, 1);
        let emb = OnePlanarEmbedding::from_planar(&g, RotationSystem::new(rots));
        assert!(!validate(&g, &emb));
    }

    #[test]
    fn wrong_graph_rejected() {
        let g = generators::complete(4);
        let rs = test_planarity(&g).embedding.unwrap();
        let emb = OnePlanarEmbedding::from_planar(&g, rs);
        let h = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!validate(&h, &emb));
    }

    #[test]
    fn non_alternating_dummy_rejected() {
        // complete(4) crossing 02 with 13; planar rotation of the star graph
        // with halves in the order 0, 2, 1, 3 around the dummy is fine, any
        // planar rotation where e1's halves are adjacent is not.
        let g = generators::complete(4);
        let p = planarize(&g, &[(1, 4)]).unwrap();
        let rs = test_planarity(&p.star_graph).embedding.unwrap();
        let at_dummy: Vec<u8> = rs
            .at(4)
            .iter()
            .map(|&s| match p.star_edges[s] {
                crate::embed::StarEdge::Half { half, .. } => half / 2,
                _ => unreachable!(),
            })
            .collect();
        let alternating = at_dummy[0] != at_dummy[1] && at_dummy[1] != at_dummy[2];
        let emb = OnePlanarEmbedding { planarization: p, rotation: rs, crossings: vec![(1, 4)] };
        assert_eq!(validate(&g, &emb), alternating);
    }

    #[test]
    fn adjacent_crossing_rejected() {
        let g = generators::complete(4);
        let rs = test_planarity(&g).embedding.unwrap();
        let mut emb = OnePlanarEmbedding::from_planar(&g, rs);
        emb.crossings.push((0, 1));
        assert!(!validate(&g, &emb));
    }
}
