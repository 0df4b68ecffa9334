//! Shared fixtures for the criterion benches.

use leafspan_core::corpus;
use leafspan_core::graph::{Graph, SpanningTree};

/// A seeded random host with a fixed pair of spanning trees.
pub fn transform_fixture(n: usize, m: usize, seed: u64) -> (Graph, SpanningTree, SpanningTree) {
    let mut rng = corpus::rng(seed);
    let g = corpus::random_connected_graph(&mut rng, n, m);
    let a = corpus::random_spanning_tree(&mut rng, &g);
    let b = corpus::random_spanning_tree(&mut rng, &g);
    (g, a, b)
}
