//! Vertex-connectivity checks via vertex-split max flow.

use std::collections::VecDeque;

use crate::graph::Graph;

/// True iff no vertex cut of size `< k` exists. A graph in which every
/// pair of vertices is adjacent has no vertex cut at all, so it passes
/// for every `k`. Intended for desk-scale instances; every non-adjacent
/// pair is checked with a unit-capacity flow, stopping once `k`
/// internally disjoint paths are found.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    let complete = g.edge_count() == n * (n - 1) / 2;
    if complete {
        return true;
    }
    // A vertex of degree < k together with any non-neighbor witnesses a
    // small cut.
    if (0..n).any(|v| g.degree(v) < k) {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(crate::graph::Edge::new(s, t)) {
                continue;
            }
            if max_disjoint_paths(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Number of internally vertex-disjoint s-t paths, capped at `cap`.
/// Menger: equals the minimum s-t vertex cut for non-adjacent s, t.
fn max_disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.vertex_count();
    // Split each vertex v into in-node 2v and out-node 2v+1.
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1);
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        net.add_edge(2 * u + 1, 2 * v, 1);
        net.add_edge(2 * v + 1, 2 * u, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, cap as i64) as usize
}

struct FlowEdge {
    to: usize,
    rev: usize,
    residual: i64,
}

struct FlowNetwork {
    adj: Vec<Vec<FlowEdge>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(FlowEdge {
            to,
            rev: rev_from,
            residual: cap,
        });
        self.adj[to].push(FlowEdge {
            to: from,
            rev: rev_to,
            residual: 0,
        });
    }

    /// Edmonds-Karp, stopping once `limit` units have been pushed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: i64) -> i64 {
        let mut flow = 0;
        while flow < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::new();
            queue.push_back(source);
            prev[source] = Some((source, usize::MAX));
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for (i, e) in self.adj[v].iter().enumerate() {
                    if e.residual > 0 && prev[e.to].is_none() {
                        prev[e.to] = Some((v, i));
                        queue.push_back(e.to);
                    }
                }
            }
            if prev[sink].is_none() {
                break;
            }
            // Unit capacities throughout: each augmenting path carries 1.
            let mut v = sink;
            while v != source {
                let (u, i) = prev[v].unwrap();
                let rev = self.adj[u][i].rev;
                self.adj[u][i].residual -= 1;
                self.adj[v][rev].residual += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}
