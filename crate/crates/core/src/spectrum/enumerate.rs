//! Exhaustive spanning-tree enumeration and the matrix-tree count.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SpanningTree};

/// Visits every spanning tree of `g` exactly once and returns the total.
/// Trees are produced by include/exclude decisions on the sorted edge
/// list; an edge may be excluded only if the remaining edges still
/// connect the graph, so every branch of the recursion completes a tree.
/// Aborts with a budget error once more than `budget` trees were visited.
pub fn enumerate_spanning_trees(
    g: &Graph,
    budget: u64,
    mut visitor: impl FnMut(&SpanningTree),
) -> Result<u64> {
    enumerate_with_control(g, budget, |t| {
        visitor(t);
        ControlFlow::Continue(())
    })
    .map(|(count, _)| count)
}

/// Enumeration core with early stop. Returns `(count, stopped_early)`.
pub(crate) fn enumerate_with_control(
    g: &Graph,
    budget: u64,
    visitor: impl FnMut(&SpanningTree) -> ControlFlow<()>,
) -> Result<(u64, bool)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut state = Enumerator {
        g,
        edges: g.edges().collect(),
        n,
        budget,
        count: 0,
        stopped: false,
        dsu: RollbackDsu::new(n),
        included: Vec::with_capacity(n.saturating_sub(1)),
        visitor,
    };
    state.recurse(0)?;
    Ok((state.count, state.stopped))
}

struct Enumerator<'a, F> {
    g: &'a Graph,
    edges: Vec<Edge>,
    n: usize,
    budget: u64,
    count: u64,
    stopped: bool,
    dsu: RollbackDsu,
    included: Vec<Edge>,
    visitor: F,
}

impl<F: FnMut(&SpanningTree) -> ControlFlow<()>> Enumerator<'_, F> {
    fn recurse(&mut self, idx: usize) -> Result<()> {
        if self.stopped {
            return Ok(());
        }
        if self.included.len() + 1 == self.n {
            self.count += 1;
            if self.count > self.budget {
                return Err(Error::BudgetExceeded {
                    operation: "spanning tree enumeration",
                    budget: self.budget,
                });
            }
            let mut edges = self.included.clone();
            edges.sort_unstable();
            let tree = SpanningTree::from_parts(self.g.fingerprint(), self.n, edges);
            if (self.visitor)(&tree).is_break() {
                self.stopped = true;
            }
            return Ok(());
        }
        if idx == self.edges.len() {
            return Ok(());
        }
        let e = self.edges[idx];
        let (u, v) = e.endpoints();
        if self.dsu.find(u) != self.dsu.find(v) {
            let mark = self.dsu.mark();
            self.dsu.union(u, v);
            self.included.push(e);
            self.recurse(idx + 1)?;
            self.included.pop();
            self.dsu.rollback(mark);
        }
        // Excluding e is viable only if the later edges can still connect
        // everything; bridges of the remaining graph are forced in.
        if self.exclude_feasible(idx) {
            self.recurse(idx + 1)?;
        }
        Ok(())
    }

    fn exclude_feasible(&mut self, idx: usize) -> bool {
        let components = self.n - self.included.len();
        if components == 1 {
            return true;
        }
        let mut scratch: Vec<usize> = (0..self.n).map(|v| self.dsu.find(v)).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut merges = 0;
        for &e in &self.edges[idx + 1..] {
            let (u, v) = e.endpoints();
            let (ru, rv) = (find(&mut scratch, u), find(&mut scratch, v));
            if ru != rv {
                scratch[ru] = rv;
                merges += 1;
                if merges + 1 == components {
                    return true;
                }
            }
        }
        false
    }
}

/// Union-find with an undo stack and no path compression, so unions can
/// be rolled back on backtrack.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>, // roots that were attached
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        debug_assert_ne!(ra, rb);
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.history.push(ra);
    }

    fn mark(&self) -> usize {
        self.history.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let child = self.history.pop().unwrap();
            let root = self.parent[child];
            self.size[root] -= self.size[child];
            self.parent[child] = child;
        }
    }
}

/// Number of spanning trees by the matrix-tree theorem, evaluated as an
/// exact integer determinant of a Laplacian minor (Bareiss fraction-free
/// elimination).
pub fn kirchhoff_tree_count(g: &Graph) -> u128 {
    let n = g.vertex_count();
    if n <= 1 {
        return 1;
    }
    let d = n - 1;
    let mut a = vec![vec![0i128; d]; d];
    for v in 1..n {
        a[v - 1][v - 1] = g.degree(v) as i128;
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        if u >= 1 {
            a[u - 1][v - 1] = -1;
            a[v - 1][u - 1] = -1;
        }
    }
    let det = bareiss_determinant(a);
    debug_assert!(det >= 0);
    det as u128
}

fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
