//! Small graph families used by tests, benchmarks and the CLI examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexId};

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_simple_edges(n, edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_simple_edges(a + b, edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    Graph::from_simple_edges(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn path(n: usize) -> Graph {
    Graph::from_simple_edges(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `rows x cols` grid graph; vertex `(r, c)` is `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_simple_edges(rows * cols, edges)
}

/// Disjoint union of `a` and `b` with `b`'s vertex `glue_b` identified with
/// `a`'s vertex `glue_a`. The result keeps `a`'s ids; `b`'s other vertices
/// follow.
pub fn glue(a: &Graph, glue_a: VertexId, b: &Graph, glue_b: VertexId) -> Graph {
    let offset = a.n();
    let map = |v: VertexId| match v.cmp(&glue_b) {
        std::cmp::Ordering::Equal => glue_a,
        std::cmp::Ordering::Less => offset + v,
        std::cmp::Ordering::Greater => offset + v - 1,
    };
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (map(u), map(v))));
    Graph::from_simple_edges(a.n() + b.n() - 1, edges)
}

/// A uniformly shuffled random spanning tree plus random extra edges, for a
/// connected simple graph with exactly `m` edges.
///
/// Panics if `m` is outside `n-1 ..= n(n-1)/2`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let max = n * n.saturating_sub(1) / 2;
    assert!(n >= 1 && m + 1 >= n && m <= max, "no connected simple graph with n={n}, m={m}");
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![false; n * n];
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let u = order[i];
        let v = order[rng.gen_range(0..i)];
        present[u * n + v] = true;
        present[v * n + u] = true;
        edges.push((u.min(v), u.max(v)));
    }
    let mut rest: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !present[u * n + v]).collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(m - (n - 1)));
    edges.sort_unstable();
    Graph::from_simple_edges(n, edges)
}
