//! Generators for the concrete graph families: the extremal
//! triangulation family G_k, the 8-vertex monotonicity counterexample
//! with its two trees, 6-regular torus grids, and small platonic
//! triangulations.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

/// A generated graph together with per-vertex labels and a family tag.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub family: Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gk { k: usize },
    Counterexample,
    Torus { a: usize, b: usize },
    Platonic(PlatonicSolid),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlatonicSolid {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl FromStr for PlatonicSolid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tetrahedron" => Ok(PlatonicSolid::Tetrahedron),
            "octahedron" => Ok(PlatonicSolid::Octahedron),
            "icosahedron" => Ok(PlatonicSolid::Icosahedron),
            other => Err(Error::BadGeneratorParameter(format!(
                "unknown solid `{other}`"
            ))),
        }
    }
}

/// Vertex index of `v^i_j` in `gen_gk` output; `i` is 1-based, `j` is
/// taken modulo 4.
pub fn gk_vertex(i: usize, j: usize) -> usize {
    assert!(i >= 1);
    4 * (i - 1) + (j % 4)
}

/// Vertex index of grid position `(x, y)` in `gen_torus_grid(a, b)`
/// output.
pub fn torus_vertex(b: usize, x: usize, y: usize) -> usize {
    x * b + y
}

/// The stacked-cycle triangulation on n = 4k vertices: k disjoint
/// 4-cycles joined by rungs and one diagonal per quadrilateral, with the
/// two end cycles closed off by a chord. Always a triangulation count
/// (m = 3n - 6); for k >= 6 divisible by 3 it is the extremal family
/// whose maximum leaf number is exactly 2n/3.
pub fn gen_gk(k: usize) -> Result<LabeledGraph> {
    if k < 2 {
        return Err(Error::BadGeneratorParameter(format!(
            "gk needs k >= 2, got {k}"
        )));
    }
    let n = 4 * k;
    let mut edges = Vec::with_capacity(3 * n - 6);
    for i in 1..=k {
        for j in 0..4 {
            edges.push((gk_vertex(i, j), gk_vertex(i, j + 1)));
        }
    }
    for i in 1..k {
        for j in 0..4 {
            edges.push((gk_vertex(i, j), gk_vertex(i + 1, j)));
            edges.push((gk_vertex(i, j), gk_vertex(i + 1, j + 1)));
        }
    }
    edges.push((gk_vertex(1, 1), gk_vertex(1, 3)));
    edges.push((gk_vertex(k, 1), gk_vertex(k, 3)));

    let graph = Graph::new(n, &edges)?;
    debug_assert_eq!(graph.edge_count(), 3 * n - 6);
    let labels = (1..=k)
        .flat_map(|i| (0..4).map(move |j| format!("v{i}_{j}")))
        .collect();
    Ok(LabeledGraph {
        graph,
        labels,
        family: Family::Gk { k },
    })
}

/// The 8-vertex, 11-edge graph on which no leaf-increasing first
/// exchange exists: the tree `t` has 5 leaves, the maximum-leaf tree
/// `t_prime` has 6, yet every single exchange applied to `t` loses a
/// leaf.
pub fn gen_counterexample() -> (LabeledGraph, SpanningTree, SpanningTree) {
    // Vertices v1..v8 map to 0..7.
    let edges = [
        (0, 1), // v1v2
        (0, 2), // v1v3
        (0, 3), // v1v4
        (0, 4), // v1v5
        (0, 5), // v1v6
        (1, 6), // v2v7
        (2, 6), // v3v7
        (3, 7), // v4v8
        (4, 7), // v5v8
        (5, 6), // v6v7
        (5, 7), // v6v8
    ];
    let graph = Graph::new(8, &edges).expect("fixed edge list is valid");
    let labels = (1..=8).map(|i| format!("v{i}")).collect();

    let t = SpanningTree::new(
        &graph,
        [
            Edge::new(0, 5), // v1v6
            Edge::new(1, 6), // v2v7
            Edge::new(2, 6), // v3v7
            Edge::new(3, 7), // v4v8
            Edge::new(4, 7), // v5v8
            Edge::new(5, 6), // v6v7
            Edge::new(5, 7), // v6v8
        ],
    )
    .expect("t is a spanning tree");
    let t_prime = SpanningTree::new(
        &graph,
        [
            Edge::new(0, 1), // v1v2
            Edge::new(0, 2), // v1v3
            Edge::new(0, 3), // v1v4
            Edge::new(0, 4), // v1v5
            Edge::new(0, 5), // v1v6
            Edge::new(5, 6), // v6v7
            Edge::new(5, 7), // v6v8
        ],
    )
    .expect("t_prime is a spanning tree");
    assert_eq!(t.leaf_count(), 5);
    assert_eq!(t_prime.leaf_count(), 6);
    debug_assert_eq!(
        crate::spectrum::max_leaf_exact(&graph, 1 << 20)
            .expect("desk-scale instance")
            .0,
        t_prime.leaf_count()
    );
    (
        LabeledGraph {
            graph,
            labels,
            family: Family::Counterexample,
        },
        t,
        t_prime,
    )
}

/// The 6-regular triangulated grid on the `a x b` torus: neighbors in
/// the two axis directions plus one wrapped diagonal. Needs `a, b >= 3`
/// to stay simple; then m = 3n.
pub fn gen_torus_grid(a: usize, b: usize) -> Result<LabeledGraph> {
    if a < 3 || b < 3 {
        return Err(Error::BadGeneratorParameter(format!(
            "torus grid needs both sides >= 3, got {a} x {b}"
        )));
    }
    let n = a * b;
    let mut edges = Vec::with_capacity(3 * n);
    for x in 0..a {
        for y in 0..b {
            let v = torus_vertex(b, x, y);
            edges.push((v, torus_vertex(b, (x + 1) % a, y)));
            edges.push((v, torus_vertex(b, x, (y + 1) % b)));
            edges.push((v, torus_vertex(b, (x + 1) % a, (y + 1) % b)));
        }
    }
    let graph = Graph::new(n, &edges)?;
    debug_assert_eq!(graph.edge_count(), 3 * n);
    debug_assert!((0..n).all(|v| graph.degree(v) == 6));
    let labels = (0..a)
        .flat_map(|x| (0..b).map(move |y| format!("({x},{y})")))
        .collect();
    Ok(LabeledGraph {
        graph,
        labels,
        family: Family::Torus { a, b },
    })
}

/// Small platonic triangulations (m = 3n - 6 each).
pub fn gen_platonic(solid: PlatonicSolid) -> LabeledGraph {
    let (graph, labels) = match solid {
        PlatonicSolid::Tetrahedron => {
            let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let labels = (0..4).map(|i| format!("v{i}")).collect();
            (Graph::new(4, &edges).unwrap(), labels)
        }
        PlatonicSolid::Octahedron => {
            // All pairs except the three antipodal ones.
            let antipodal = [(0, 5), (1, 4), (2, 3)];
            let mut edges = Vec::new();
            for u in 0..6 {
                for v in u + 1..6 {
                    if !antipodal.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                }
            }
            let labels = (0..6).map(|i| format!("v{i}")).collect();
            (Graph::new(6, &edges).unwrap(), labels)
        }
        PlatonicSolid::Icosahedron => {
            // Apex 0, upper pentagon 1..=5, lower pentagon 6..=10, base 11.
            let u = |i: usize| 1 + i % 5;
            let w = |i: usize| 6 + i % 5;
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((0, u(i)));
                edges.push((u(i), u(i + 1)));
                edges.push((w(i), w(i + 1)));
                edges.push((u(i), w(i)));
                edges.push((u(i), w(i + 1)));
                edges.push((11, w(i)));
            }
            let mut labels = vec!["top".to_string()];
            labels.extend((0..5).map(|i| format!("u{i}")));
            labels.extend((0..5).map(|i| format!("w{i}")));
            labels.push("bottom".to_string());
            (Graph::new(12, &edges).unwrap(), labels)
        }
    };
    debug_assert_eq!(graph.edge_count(), 3 * graph.vertex_count() - 6);
    LabeledGraph {
        graph,
        labels,
        family: Family::Platonic(solid),
    }
}
