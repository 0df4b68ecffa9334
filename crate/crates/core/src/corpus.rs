//! Small named graphs and seeded random instances.
//!
//! Test suites and benchmarks draw their inputs from here so that every
//! randomized run is reproducible from a single `u64` seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph, SpanningTree};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Star: vertex 0 joined to `1..n`.
pub fn star(n: usize) -> Graph {
    assert!(n >= 2);
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Wheel: hub 0 plus the cycle `1..n`. `wheel(5)` is a hub on a 4-cycle.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4);
    let rim = n - 1;
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    for i in 0..rim {
        edges.push((1 + i, 1 + (i + 1) % rim));
    }
    Graph::new(n, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, &edges).unwrap()
}

/// Octahedron (K_{2,2,2}).
pub fn octahedron() -> Graph {
    crate::construct::gen_platonic(crate::construct::PlatonicSolid::Octahedron).graph
}

/// A connected graph on `n` vertices with exactly `m` edges, uniform over
/// labeled trees for the skeleton plus uniformly chosen extra edges.
/// Requires `n - 1 <= m <= n(n-1)/2`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    assert!(n >= 1);
    let max_m = n * (n - 1) / 2;
    assert!(m + 1 >= n && m <= max_m, "bad edge count {m} for n={n}");
    let mut edges: Vec<(usize, usize)> = if n >= 2 {
        random_tree_edges(rng, n)
    } else {
        Vec::new()
    };
    let mut present = std::collections::HashSet::new();
    for &(a, b) in &edges {
        present.insert((a.min(b), a.max(b)));
    }
    let mut non_edges: Vec<(usize, usize)> = Vec::with_capacity(max_m - edges.len());
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) {
                non_edges.push((u, v));
            }
        }
    }
    non_edges.shuffle(rng);
    edges.extend(non_edges.into_iter().take(m - (n - 1)));
    Graph::new(n, &edges).unwrap()
}

/// Uniform random labeled tree on `n >= 2` vertices via Prüfer decoding.
fn random_tree_edges(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut count = vec![0usize; n];
    for &x in &seq {
        count[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| count[v] == 0).collect();
    for &x in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, x));
        count[x] -= 1;
        if count[x] == 0 {
            leaves.insert(x);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

/// A spanning tree of `g` sampled by Kruskal over a shuffled edge order.
pub fn random_spanning_tree(rng: &mut impl Rng, g: &Graph) -> SpanningTree {
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.shuffle(rng);
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    for e in edges {
        let (u, v) = e.endpoints();
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            chosen.push(e);
            if chosen.len() + 1 == n {
                break;
            }
        }
    }
    SpanningTree::new(g, chosen).expect("host must be connected")
}
