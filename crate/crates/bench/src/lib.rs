//! Reproducible benchmark workloads.

use oneplanar_core::generators::random_connected;
use oneplanar_core::planarity::is_planar;
use oneplanar_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A connected nonplanar graph on `n` vertices with `floor(density * n)`
/// edges, drawn with a generator seeded by `seed`. Draws are repeated until
/// one is nonplanar.
///
/// Panics if that edge count cannot give a connected simple graph.
pub fn sparse_nonplanar(n: usize, density: f64, seed: u64) -> Graph {
    let m = (density * n as f64).floor() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = random_connected(n, m, &mut rng);
        if !is_planar(&g) {
            return g;
        }
    }
}

/// `count` sparse nonplanar graphs with seeds `0..count`.
pub fn sparse_corpus(n: usize, density: f64, count: u64) -> Vec<Graph> {
    (0..count).map(|seed| sparse_nonplanar(n, density, seed)).collect()
}
