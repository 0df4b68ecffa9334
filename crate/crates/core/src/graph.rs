//! Undirected simple graphs and spanning trees.
//!
//! Vertices are dense indices `0..n`. Edges are stored as normalized
//! `(min, max)` pairs so that edge-set bookkeeping never depends on
//! orientation.

use std::collections::BTreeSet;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// An unordered pair of distinct vertices, stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop; use
    /// [`Edge::try_new`] for unvalidated input.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "loop edge at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        Ok(Edge::new(a, b))
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn min_end(self) -> usize {
        self.u
    }

    pub fn max_end(self) -> usize {
        self.v
    }

    pub fn has_endpoint(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} is not an endpoint of {self}");
            self.u
        }
    }

    /// The common endpoint of two edges, if any.
    pub fn shared_vertex(self, other: Edge) -> Option<usize> {
        if other.has_endpoint(self.u) {
            Some(self.u)
        } else if other.has_endpoint(self.v) {
            Some(self.v)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Identifies the graph a spanning tree was built against. Derived from the
/// canonical edge-list serialization, so it is stable across processes and
/// reusable as the on-disk `# tree-of:` binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphFingerprint([u8; 32]);

impl GraphFingerprint {
    pub fn to_hex(self) -> String {
        let mut s = String::with_capacity(64);
        for b in self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Display for GraphFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// An undirected simple graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adjacency: Vec<Vec<usize>>,
    fingerprint: GraphFingerprint,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Endpoints are
    /// range-checked, loops rejected, duplicates dropped.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for &(a, b) in edge_list {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            edges.insert(Edge::try_new(a, b)?);
        }
        Ok(Self::from_edge_set(n, edges))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let fingerprint = fingerprint_of(n, &edges);
        Graph {
            n,
            edges,
            adjacency,
            fingerprint,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn fingerprint(&self) -> GraphFingerprint {
        self.fingerprint
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True iff every open neighborhood induces a connected subgraph.
    /// An empty neighborhood fails the test whenever the graph has more
    /// than one vertex.
    pub fn is_locally_connected(&self) -> bool {
        for v in 0..self.n {
            let nbrs = &self.adjacency[v];
            if nbrs.is_empty() {
                if self.n > 1 {
                    return false;
                }
                continue;
            }
            if !self.induced_connected(nbrs) {
                return false;
            }
        }
        true
    }

    /// Whether the subgraph induced by `verts` is connected. Empty sets
    /// count as connected.
    pub fn induced_connected(&self, verts: &[usize]) -> bool {
        if verts.is_empty() {
            return true;
        }
        let mut member = vec![false; self.n];
        for &v in verts {
            member[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![verts[0]];
        seen[verts[0]] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == verts.len()
    }
}

fn fingerprint_of(n: usize, edges: &BTreeSet<Edge>) -> GraphFingerprint {
    let mut hasher = Sha256::new();
    hasher.update(format!("{} {}\n", n, edges.len()).as_bytes());
    for e in edges {
        hasher.update(format!("{} {}\n", e.u, e.v).as_bytes());
    }
    GraphFingerprint(hasher.finalize().into())
}

/// A spanning tree of a host graph: exactly `n - 1` host edges forming a
/// connected acyclic subgraph. Degrees and the leaf count are cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    host: GraphFingerprint,
    edges: Vec<Edge>, // sorted ascending
    degree: Vec<u32>,
    leaf_count: usize,
}

impl SpanningTree {
    /// Validating constructor: checks membership in the host edge set,
    /// edge count, connectivity, and acyclicity independently.
    pub fn new(host: &Graph, edge_list: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let n = host.vertex_count();
        let mut edges: Vec<Edge> = edge_list.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        for &e in &edges {
            if !host.has_edge(e) {
                return Err(Error::EdgeNotInHost(e));
            }
        }
        let mut degree = vec![0u32; n];
        for &e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let leaf_count = degree.iter().filter(|&&d| d == 1).count();
        let tree = SpanningTree {
            host: host.fingerprint(),
            edges,
            degree,
            leaf_count,
        };
        tree.validate_structure(n)?;
        Ok(tree)
    }

    /// Assembles the cached fields without structural validation. Callers
    /// must guarantee the edge list already forms a spanning tree; debug
    /// builds re-check.
    pub(crate) fn from_parts(host: GraphFingerprint, n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]), "edges not sorted");
        let mut degree = vec![0u32; n];
        for &e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let leaf_count = degree.iter().filter(|&&d| d == 1).count();
        let tree = SpanningTree {
            host,
            edges,
            degree,
            leaf_count,
        };
        debug_assert!(tree.validate_structure(n).is_ok());
        tree
    }

    fn validate_structure(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::NotSpanningTree("empty vertex set".into()));
        }
        if self.edges.len() != n - 1 {
            return Err(Error::NotSpanningTree(format!(
                "{} edges, expected {}",
                self.edges.len(),
                n - 1
            )));
        }
        // Acyclicity via union-find; connectivity follows from the edge
        // count once no cycle exists, but check reachability anyway.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in &self.edges {
            let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if ru == rv {
                return Err(Error::NotSpanningTree(format!("cycle through {e}")));
            }
            parent[ru] = rv;
        }
        let root = find(&mut parent, 0);
        if (0..n).any(|v| find(&mut parent, v) != root) {
            return Err(Error::NotSpanningTree("not connected".into()));
        }
        Ok(())
    }

    pub fn host(&self) -> GraphFingerprint {
        self.host
    }

    pub fn vertex_count(&self) -> usize {
        self.degree.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v] as usize
    }

    /// Number of degree-1 vertices.
    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree[v] == 1
    }

    /// The non-leaf vertices, ascending.
    pub fn stems(&self) -> Vec<usize> {
        (0..self.degree.len())
            .filter(|&v| self.degree[v] != 1)
            .collect()
    }

    /// Tree adjacency lists, rebuilt on demand.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.degree.len()];
        for &e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// The unique path between `from` and `to` as a vertex sequence.
    pub fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.degree.len();
        assert!(from < n && to < n);
        if from == to {
            return vec![from];
        }
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        parent[from] = from;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Applies `+e_in - e_out` assuming legality was already established.
    /// Degrees and leaf count are updated incrementally; debug builds
    /// re-validate the result.
    pub(crate) fn exchanged_unchecked(&self, e_in: Edge, e_out: Edge) -> SpanningTree {
        let mut edges = self.edges.clone();
        let out_pos = edges.binary_search(&e_out).expect("e_out must be a tree edge");
        edges.remove(out_pos);
        let in_pos = edges.binary_search(&e_in).unwrap_err();
        edges.insert(in_pos, e_in);

        let mut degree = self.degree.clone();
        let mut leaf_count = self.leaf_count as isize;
        let bump = |deg: &mut Vec<u32>, v: usize, delta: i32, leaves: &mut isize| {
            let before = deg[v];
            let after = (before as i32 + delta) as u32;
            deg[v] = after;
            if before == 1 {
                *leaves -= 1;
            }
            if after == 1 {
                *leaves += 1;
            }
        };
        bump(&mut degree, e_out.u, -1, &mut leaf_count);
        bump(&mut degree, e_out.v, -1, &mut leaf_count);
        bump(&mut degree, e_in.u, 1, &mut leaf_count);
        bump(&mut degree, e_in.v, 1, &mut leaf_count);

        let tree = SpanningTree {
            host: self.host,
            edges,
            degree,
            leaf_count: leaf_count as usize,
        };
        debug_assert!(tree.validate_structure(tree.vertex_count()).is_ok());
        debug_assert_eq!(
            tree.leaf_count,
            tree.degree.iter().filter(|&&d| d == 1).count()
        );
        tree
    }
}

/// The unique cycle of `t + e`, returned as an edge sequence that starts
/// with `e` and in which consecutive edges share a vertex.
pub fn fundamental_cycle(host: &Graph, t: &SpanningTree, e: Edge) -> Result<Vec<Edge>> {
    if !host.has_edge(e) {
        return Err(Error::EdgeNotInHost(e));
    }
    if t.contains_edge(e) {
        return Err(Error::EdgeAlreadyInTree(e));
    }
    let (u, v) = e.endpoints();
    let path = t.path_between(u, v);
    let mut cycle = Vec::with_capacity(path.len());
    cycle.push(e);
    // Walk the tree path back from v toward u so that consecutive entries
    // share a vertex.
    for pair in path.windows(2).rev() {
        cycle.push(Edge::new(pair[0], pair[1]));
    }
    Ok(cycle)
}
