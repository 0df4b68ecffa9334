//! Search for spanning trees without degree-2 vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

/// Finds a spanning tree with no degree-2 vertex.
///
/// `Ok(Some(tree))` is a validated witness, `Ok(None)` means the search
/// space was exhausted and no such tree exists, and a budget error means
/// the search is inconclusive — never evidence of nonexistence.
///
/// A batch-attachment greedy pass runs first from every start vertex;
/// when it fails, exhaustive backtracking over tree growth takes over,
/// pruning any partial tree that strands a forced degree-2 vertex.
pub fn find_hist(g: &Graph, budget: u64) -> Result<Option<SpanningTree>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if !g.is_connected() {
        return Ok(None);
    }
    if let Some(tree) = greedy_hist(g) {
        return Ok(Some(tree));
    }
    let mut searcher = HistSearcher::new(g, budget);
    searcher.search()
}

/// Grows star batches: repeatedly picks the in-tree vertex with the most
/// outside neighbors and attaches all of them at once, skipping any
/// batch that would leave its parent at degree exactly 2.
fn greedy_hist(g: &Graph) -> Option<SpanningTree> {
    let n = g.vertex_count();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    'start: for s in starts {
        let mut in_tree = vec![false; n];
        let mut degree = vec![0usize; n];
        let mut edges: Vec<Edge> = Vec::with_capacity(n.saturating_sub(1));
        in_tree[s] = true;
        let mut attached = 1;
        while attached < n {
            let mut best: Option<(usize, usize)> = None; // (count, vertex)
            for u in 0..n {
                if !in_tree[u] {
                    continue;
                }
                let c = g.neighbors(u).iter().filter(|&&w| !in_tree[w]).count();
                if c == 0 || degree[u] + c == 2 {
                    continue;
                }
                if best.is_none_or(|(bc, bu)| c > bc || (c == bc && u < bu)) {
                    best = Some((c, u));
                }
            }
            let Some((_, u)) = best else {
                continue 'start;
            };
            let batch: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !in_tree[w])
                .collect();
            for w in batch {
                in_tree[w] = true;
                degree[u] += 1;
                degree[w] += 1;
                edges.push(Edge::new(u, w));
                attached += 1;
            }
        }
        if degree.iter().all(|&d| d != 2) {
            return Some(SpanningTree::new(g, edges).expect("greedy tree is spanning"));
        }
    }
    None
}

struct HistSearcher<'a> {
    g: &'a Graph,
    edge_list: Vec<Edge>,
    excluded: Vec<bool>,
    in_tree: Vec<bool>,
    degree: Vec<u32>,
    tree_edges: Vec<Edge>,
    nodes: u64,
    budget: u64,
}

impl<'a> HistSearcher<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        let edge_list: Vec<Edge> = g.edges().collect();
        let n = g.vertex_count();
        let mut in_tree = vec![false; n];
        in_tree[0] = true;
        HistSearcher {
            g,
            excluded: vec![false; edge_list.len()],
            edge_list,
            in_tree,
            degree: vec![0; n],
            tree_edges: Vec::with_capacity(n.saturating_sub(1)),
            nodes: 0,
            budget,
        }
    }

    fn edge_id(&self, e: Edge) -> usize {
        self.edge_list.binary_search(&e).expect("host edge")
    }

    fn search(&mut self) -> Result<Option<SpanningTree>> {
        let n = self.g.vertex_count();
        if n == 1 {
            let tree = SpanningTree::from_parts(self.g.fingerprint(), 1, Vec::new());
            return Ok(Some(tree));
        }
        self.recurse()
    }

    /// Frontier edges of `v`: non-excluded edges to vertices outside the
    /// tree. These are the only way `v`'s tree degree can still grow.
    fn growth_options(&self, v: usize) -> Vec<Edge> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.in_tree[w])
            .map(|w| Edge::new(v, w))
            .filter(|&e| !self.excluded[self.edge_id(e)])
            .collect()
    }

    fn recurse(&mut self) -> Result<Option<SpanningTree>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                operation: "degree-2-free spanning tree search",
                budget: self.budget,
            });
        }
        let n = self.g.vertex_count();
        if self.tree_edges.len() == n - 1 {
            if self.degree.iter().all(|&d| d != 2) {
                let mut edges = self.tree_edges.clone();
                edges.sort_unstable();
                return Ok(Some(SpanningTree::from_parts(
                    self.g.fingerprint(),
                    n,
                    edges,
                )));
            }
            return Ok(None);
        }
        if !self.outside_reachable() {
            return Ok(None);
        }
        // A tree vertex stuck at degree 2 with no growth options kills
        // the branch; one with options must be fixed first.
        let mut branch_edge: Option<Edge> = None;
        for v in 0..n {
            if self.in_tree[v] && self.degree[v] == 2 {
                let options = self.growth_options(v);
                match options.first() {
                    None => return Ok(None),
                    Some(&e) => {
                        branch_edge = Some(e);
                        break;
                    }
                }
            }
        }
        let e = match branch_edge {
            Some(e) => e,
            None => {
                let mut first: Option<Edge> = None;
                for v in 0..n {
                    if !self.in_tree[v] {
                        continue;
                    }
                    if let Some(&e) = self.growth_options(v).first() {
                        if first.is_none_or(|f| e < f) {
                            first = Some(e);
                        }
                    }
                }
                match first {
                    Some(e) => e,
                    None => return Ok(None),
                }
            }
        };

        let (u, w) = e.endpoints();
        let (parent, child) = if self.in_tree[u] { (u, w) } else { (w, u) };

        // Include branch.
        self.in_tree[child] = true;
        self.degree[parent] += 1;
        self.degree[child] += 1;
        self.tree_edges.push(e);
        let found = self.recurse()?;
        self.tree_edges.pop();
        self.degree[child] -= 1;
        self.degree[parent] -= 1;
        self.in_tree[child] = false;
        if found.is_some() {
            return Ok(found);
        }

        // Exclude branch.
        let id = self.edge_id(e);
        self.excluded[id] = true;
        let found = self.recurse()?;
        self.excluded[id] = false;
        Ok(found)
    }

    /// Every outside vertex must stay reachable from the tree through
    /// non-excluded edges.
    fn outside_reachable(&self) -> bool {
        let n = self.g.vertex_count();
        let mut seen = self.in_tree.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| self.in_tree[v]).collect();
        let mut reached = queue.len();
        while let Some(v) = queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if !seen[w] && !self.excluded[self.edge_id(Edge::new(v, w))] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn assert_hist(g: &Graph, t: &SpanningTree) {
        SpanningTree::new(g, t.edges().iter().copied()).unwrap();
        for v in 0..g.vertex_count() {
            assert_ne!(t.degree(v), 2, "vertex {v} has degree 2");
        }
    }

    #[test]
    fn k4_has_a_star_hist() {
        let g = corpus::complete(4);
        let t = find_hist(&g, 1 << 20).unwrap().unwrap();
        assert_hist(&g, &t);
        assert_eq!(t.leaf_count(), 3);
    }

    #[test]
    fn cycles_have_no_hist() {
        assert_eq!(find_hist(&corpus::cycle(5), 1 << 20).unwrap(), None);
        assert_eq!(find_hist(&corpus::cycle(6), 1 << 20).unwrap(), None);
    }

    #[test]
    fn octahedron_has_a_hist() {
        let g = corpus::octahedron();
        let t = find_hist(&g, 1 << 20).unwrap().unwrap();
        assert_hist(&g, &t);
        // Any degree-2-free spanning tree has at least n/2 + 1 leaves.
        assert!(t.leaf_count() >= 4);
    }

    #[test]
    fn triangle_has_no_hist() {
        assert_eq!(find_hist(&corpus::complete(3), 1 << 20).unwrap(), None);
    }

    #[test]
    fn locally_connected_hosts_always_have_one() {
        // Existence is guaranteed for connected, locally connected
        // graphs on at least 4 vertices; triangulation instances also
        // carry at least n/2 + 1 leaves (forced by stem degrees >= 3).
        let hosts: Vec<(&str, Graph)> = vec![
            ("K4", corpus::complete(4)),
            ("K5", corpus::complete(5)),
            ("W5", corpus::wheel(5)),
            ("W7", corpus::wheel(7)),
            ("octahedron", corpus::octahedron()),
            (
                "icosahedron",
                crate::construct::gen_platonic(crate::construct::PlatonicSolid::Icosahedron).graph,
            ),
            ("T(3,3)", crate::construct::gen_torus_grid(3, 3).unwrap().graph),
            ("T(4,4)", crate::construct::gen_torus_grid(4, 4).unwrap().graph),
            ("G_4", crate::construct::gen_gk(4).unwrap().graph),
        ];
        for (name, g) in hosts {
            assert!(g.is_locally_connected(), "{name} not locally connected");
            let n = g.vertex_count();
            let t = find_hist(&g, 1 << 24)
                .unwrap()
                .unwrap_or_else(|| panic!("no degree-2-free tree on {name}"));
            assert_hist(&g, &t);
            assert!(
                2 * t.leaf_count() >= n + 2,
                "{name}: {} leaves below n/2 + 1",
                t.leaf_count()
            );
        }
    }

    #[test]
    fn k2_edge_is_a_hist() {
        let g = corpus::complete(2);
        let t = find_hist(&g, 1 << 20).unwrap().unwrap();
        assert_eq!(t.leaf_count(), 2);
    }

    #[test]
    fn budget_exhaustion_is_an_error_not_a_verdict() {
        // C7 has no HIST; with a tiny budget the exhaustive search cannot
        // finish and must not claim nonexistence.
        let err = {
            let g = corpus::cycle(7);
            let mut searcher = HistSearcher::new(&g, 2);
            searcher.search().unwrap_err()
        };
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
