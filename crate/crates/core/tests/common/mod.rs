#![allow(dead_code)]

use oneplanar_core::{Graph, VertexId};
use proptest::prelude::*;

/// Simple graphs on `n` in `min_n..=max_n` vertices with at most `max_m` edges.
pub fn graph(min_n: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let slots: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = slots.len();
        proptest::sample::subsequence(slots, 0..=max_m.min(len)).prop_map(move |edges| Graph::new(n, &edges).unwrap())
    })
}

pub fn connected_graph(min_n: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n, max_m).prop_filter("connected", Graph::is_connected)
}
