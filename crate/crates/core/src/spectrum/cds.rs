//! Minimum connected dominating sets and the stem/leaf duality.
//!
//! The stems of a spanning tree form a connected dominating set, and any
//! connected dominating set of size s yields a spanning tree with at
//! least n - s leaves, so the maximum leaf number equals n minus the
//! connected domination number.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

/// A connected dominating vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemSet {
    vertices: Vec<usize>, // sorted
}

impl StemSet {
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        validate_stem_set(g, &vs)?;
        Ok(StemSet { vertices: vs })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn validate_stem_set(g: &Graph, vs: &[usize]) -> Result<()> {
    if vs.is_empty() {
        return Err(Error::InvalidStemSet("empty set".into()));
    }
    let n = g.vertex_count();
    if let Some(&v) = vs.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidStemSet(format!("vertex {v} out of range")));
    }
    if !g.induced_connected(vs) {
        return Err(Error::InvalidStemSet(
            "induced subgraph is disconnected".into(),
        ));
    }
    let mut member = vec![false; n];
    for &v in vs {
        member[v] = true;
    }
    for v in 0..n {
        if !member[v] && !g.neighbors(v).iter().any(|&w| member[w]) {
            return Err(Error::InvalidStemSet(format!("vertex {v} is undominated")));
        }
    }
    Ok(())
}

/// A minimum-cardinality connected dominating set, by exhaustive search
/// over connected subsets of increasing size. Subsets are generated once
/// each by anchored growth (the subset minimum is fixed and extensions
/// only move to larger indices through a forbidden-set discipline), and
/// domination is checked last. `budget` caps the number of subsets
/// examined.
pub fn min_connected_dominating_set(g: &Graph, budget: u64) -> Result<StemSet> {
    let n = g.vertex_count();
    assert!(n >= 3, "connected dominating sets need n >= 3");
    assert!(g.is_connected());
    let mut examined = 0u64;
    for size in 1..=n {
        let mut found: Option<Vec<usize>> = None;
        enumerate_connected_subsets(g, size, budget, &mut examined, &mut |subset| {
            if dominates(g, subset) {
                found = Some(subset.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let Some(mut vs) = found {
            vs.sort_unstable();
            debug_assert!(validate_stem_set(g, &vs).is_ok());
            return Ok(StemSet { vertices: vs });
        }
    }
    unreachable!("the full vertex set of a connected graph dominates itself");
}

fn dominates(g: &Graph, subset: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in subset {
        member[v] = true;
    }
    (0..n).all(|v| member[v] || g.neighbors(v).iter().any(|&w| member[w]))
}

/// Calls `f` once per connected subset of exactly `size` vertices, in a
/// deterministic order. `examined` accumulates across calls and is
/// checked against `budget`.
pub(crate) fn enumerate_connected_subsets(
    g: &Graph,
    size: usize,
    budget: u64,
    examined: &mut u64,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<bool> {
    let n = g.vertex_count();
    if size == 0 || size > n {
        return Ok(false);
    }
    let mut banned = vec![false; n];
    let mut in_subset = vec![false; n];
    for root in 0..n {
        let mut subset = vec![root];
        in_subset[root] = true;
        let ext: Vec<usize> = g.neighbors(root).iter().copied().filter(|&w| w > root).collect();
        let stopped = grow(
            g,
            size,
            root,
            &mut subset,
            ext,
            &mut banned,
            &mut in_subset,
            budget,
            examined,
            f,
        )?;
        in_subset[root] = false;
        debug_assert!(banned.iter().all(|&b| !b));
        if stopped {
            return Ok(true);
        }
    }
    Ok(false)
}

#[allow(clippy::too_many_arguments)]
fn grow(
    g: &Graph,
    size: usize,
    root: usize,
    subset: &mut Vec<usize>,
    ext: Vec<usize>,
    banned: &mut Vec<bool>,
    in_subset: &mut Vec<bool>,
    budget: u64,
    examined: &mut u64,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<bool> {
    if subset.len() == size {
        *examined += 1;
        if *examined > budget {
            return Err(Error::BudgetExceeded {
                operation: "connected subset search",
                budget,
            });
        }
        return Ok(f(subset).is_break());
    }
    let mut banned_here = Vec::new();
    let mut stopped = false;
    for (i, &u) in ext.iter().enumerate() {
        if banned[u] {
            continue;
        }
        let mut child_ext: Vec<usize> = ext[i + 1..]
            .iter()
            .copied()
            .filter(|&w| !banned[w])
            .collect();
        for &w in g.neighbors(u) {
            if w > root && !banned[w] && !in_subset[w] && !child_ext.contains(&w) && !ext[..=i].contains(&w)
            {
                child_ext.push(w);
            }
        }
        subset.push(u);
        in_subset[u] = true;
        let r = grow(
            g, size, root, subset, child_ext, banned, in_subset, budget, examined, f,
        );
        subset.pop();
        in_subset[u] = false;
        match r {
            Ok(true) => {
                stopped = true;
                break;
            }
            Ok(false) => {}
            Err(e) => {
                for &b in &banned_here {
                    banned[b] = false;
                }
                return Err(e);
            }
        }
        banned[u] = true;
        banned_here.push(u);
    }
    for &b in &banned_here {
        banned[b] = false;
    }
    Ok(stopped)
}

/// Builds a spanning tree whose stems all lie inside `stems`: a spanning
/// tree of the induced subgraph on the stem set, with every outside
/// vertex attached as a leaf to its smallest dominating neighbor. The
/// result has at least `n - |stems|` leaves.
pub fn tree_from_stems(g: &Graph, stems: &StemSet) -> Result<SpanningTree> {
    validate_stem_set(g, stems.vertices())?;
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in stems.vertices() {
        member[v] = true;
    }
    // BFS tree over the induced stem subgraph, rooted at the smallest stem.
    let root = stems.vertices()[0];
    let mut edges: Vec<Edge> = Vec::with_capacity(n - 1);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if member[w] && !seen[w] {
                seen[w] = true;
                edges.push(Edge::new(v, w));
                queue.push_back(w);
            }
        }
    }
    for v in 0..n {
        if !member[v] {
            let anchor = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| member[w])
                .expect("validated stem set dominates every vertex");
            edges.push(Edge::new(v, anchor));
        }
    }
    SpanningTree::new(g, edges)
}
