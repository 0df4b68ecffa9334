//! Edge-exchange transformations between spanning trees.
//!
//! A single exchange replaces one tree edge by a non-tree edge lying on
//! its fundamental cycle and moves the leaf count by at most 2. Jumps of
//! exactly 2 are split into unit steps by walking the cycle, and chaining
//! the refined exchanges transforms any spanning tree into any other
//! while the leaf count changes by at most 1 per step.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{fundamental_cycle, Edge, Graph, SpanningTree};

/// One edge swap together with the leaf count it produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeStep {
    pub edge_in: Edge,
    pub edge_out: Edge,
    pub leaf_count_after: usize,
}

/// A replayable sequence of exchanges from a start tree. `leaf_profile`
/// records the leaf count of every tree along the way, starting with the
/// start tree itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeTrace {
    start: SpanningTree,
    steps: Vec<ExchangeStep>,
    leaf_profile: Vec<usize>,
}

impl ExchangeTrace {
    fn new(start: SpanningTree, steps: Vec<ExchangeStep>, leaf_profile: Vec<usize>) -> Self {
        debug_assert_eq!(leaf_profile.len(), steps.len() + 1);
        debug_assert_eq!(leaf_profile[0], start.leaf_count());
        debug_assert!(steps
            .iter()
            .zip(&leaf_profile[1..])
            .all(|(s, &l)| s.leaf_count_after == l));
        ExchangeTrace {
            start,
            steps,
            leaf_profile,
        }
    }

    /// Reassembles a trace from its parts, checking that the profile
    /// lines up with the start tree and the recorded step leaf counts.
    /// Step legality is the caller's concern, e.g. via
    /// [`ExchangeTrace::replay`].
    pub fn from_validated_parts(
        start: SpanningTree,
        steps: Vec<ExchangeStep>,
        leaf_profile: Vec<usize>,
    ) -> Result<Self> {
        let consistent = leaf_profile.len() == steps.len() + 1
            && leaf_profile.first() == Some(&start.leaf_count())
            && steps
                .iter()
                .zip(&leaf_profile[1..])
                .all(|(s, &l)| s.leaf_count_after == l);
        if !consistent {
            return Err(Error::ReplayMismatch {
                step: 0,
                message: "trace profile disagrees with its steps".into(),
            });
        }
        Ok(ExchangeTrace {
            start,
            steps,
            leaf_profile,
        })
    }

    pub fn start(&self) -> &SpanningTree {
        &self.start
    }

    pub fn steps(&self) -> &[ExchangeStep] {
        &self.steps
    }

    pub fn leaf_profile(&self) -> &[usize] {
        &self.leaf_profile
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every consecutive profile entry differs by at most 1.
    pub fn is_refined(&self) -> bool {
        self.leaf_profile
            .windows(2)
            .all(|w| w[0].abs_diff(w[1]) <= 1)
    }

    /// The profile never decreases.
    pub fn is_monotone(&self) -> bool {
        self.leaf_profile.windows(2).all(|w| w[0] <= w[1])
    }

    /// Re-applies every step with full legality checking and returns all
    /// intermediate trees, the start tree included. Fails if any step is
    /// illegal or a recorded leaf count disagrees with the rebuilt tree.
    pub fn replay(&self, host: &Graph) -> Result<Vec<SpanningTree>> {
        if self.start.host() != host.fingerprint() {
            return Err(Error::HostMismatch);
        }
        let mut trees = Vec::with_capacity(self.steps.len() + 1);
        trees.push(self.start.clone());
        for (i, step) in self.steps.iter().enumerate() {
            let next = exchange_step(host, trees.last().unwrap(), step.edge_in, step.edge_out)
                .map_err(|e| Error::ReplayMismatch {
                    step: i,
                    message: e.to_string(),
                })?;
            if next.leaf_count() != step.leaf_count_after
                || next.leaf_count() != self.leaf_profile[i + 1]
            {
                return Err(Error::ReplayMismatch {
                    step: i,
                    message: format!(
                        "leaf count {} does not match recorded {}",
                        next.leaf_count(),
                        step.leaf_count_after
                    ),
                });
            }
            trees.push(next);
        }
        Ok(trees)
    }

    pub fn into_parts(self) -> (SpanningTree, Vec<ExchangeStep>, Vec<usize>) {
        (self.start, self.steps, self.leaf_profile)
    }
}

/// `t + e_in - e_out`. Legal when `e_in` is a host edge outside the tree
/// and `e_out` lies on its fundamental cycle; the leaf count then moves
/// by at most 2, and by at most 1 when the two edges share a vertex.
pub fn exchange_step(
    host: &Graph,
    t: &SpanningTree,
    e_in: Edge,
    e_out: Edge,
) -> Result<SpanningTree> {
    if e_in == e_out {
        return Err(Error::IdentityExchange(e_in));
    }
    let cycle = fundamental_cycle(host, t, e_in)?;
    if !cycle.contains(&e_out) {
        return Err(Error::EdgeNotOnCycle(e_out, e_in));
    }
    Ok(t.exchanged_unchecked(e_in, e_out))
}

/// Splits an exchange into unit-leaf-delta steps. If the direct exchange
/// already moves the leaf count by at most 1 the result is just the final
/// tree; otherwise the fundamental cycle is walked from `e_in` to `e_out`
/// along its shorter side (ties broken toward the direction whose first
/// edge is lexicographically smaller), yielding one intermediate tree per
/// walked edge. Consecutive trees, and the endpoints, always differ in
/// leaf count by at most 1, and the last tree equals the direct exchange.
pub fn refine_exchange(
    host: &Graph,
    t: &SpanningTree,
    e_in: Edge,
    e_out: Edge,
) -> Result<Vec<SpanningTree>> {
    if e_in == e_out {
        return Err(Error::IdentityExchange(e_in));
    }
    let cycle = fundamental_cycle(host, t, e_in)?;
    let target = cycle
        .iter()
        .position(|&e| e == e_out)
        .ok_or(Error::EdgeNotOnCycle(e_out, e_in))?;

    let direct = t.exchanged_unchecked(e_in, e_out);
    if t.leaf_count().abs_diff(direct.leaf_count()) <= 1 {
        return Ok(vec![direct]);
    }

    let walk = walk_indices(&cycle, target);
    let mut trees = Vec::with_capacity(walk.len());
    let mut current = t.clone();
    let mut carried = e_in;
    for idx in walk {
        let out = cycle[idx];
        current = current.exchanged_unchecked(carried, out);
        trees.push(current.clone());
        carried = out;
    }
    debug_assert_eq!(trees.last().unwrap(), &direct);
    Ok(trees)
}

/// Indices of the cycle edges visited on the way from position 0 (the
/// inserted edge) to `target`, shorter direction first, ending at
/// `target` itself.
fn walk_indices(cycle: &[Edge], target: usize) -> Vec<usize> {
    let c = cycle.len();
    debug_assert!(target >= 1 && target < c);
    let forward = target;
    let backward = c - target;
    let go_forward = match forward.cmp(&backward) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => cycle[1] < cycle[c - 1],
    };
    if go_forward {
        (1..=target).collect()
    } else {
        (target..c).rev().collect()
    }
}

/// Transforms `t` into `t_target` by inserting each missing target edge
/// in ascending order and, for each, removing the first cycle edge
/// outside the target tree reached along the nearer walk direction. Every
/// recorded step is a legal single exchange with leaf delta at most 1,
/// and the total step count is at most `floor(n/2) * (n - 1)`.
pub fn transform_sequence(
    host: &Graph,
    t: &SpanningTree,
    t_target: &SpanningTree,
) -> Result<ExchangeTrace> {
    if t.host() != host.fingerprint() || t_target.host() != host.fingerprint() {
        return Err(Error::HostMismatch);
    }
    let mut steps = Vec::new();
    let mut profile = vec![t.leaf_count()];
    let mut current = t.clone();

    let inserts: Vec<Edge> = t_target
        .edges()
        .iter()
        .copied()
        .filter(|&e| !t.contains_edge(e))
        .collect(); // stays ascending: tree edges are sorted

    for e_in in inserts {
        let cycle = fundamental_cycle(host, &current, e_in)?;
        let c = cycle.len();
        // Nearest removable edge in each direction. At least one cycle
        // edge avoids the target tree because the target is acyclic.
        let fwd = (1..c)
            .find(|&i| !t_target.contains_edge(cycle[i]))
            .expect("cycle cannot be contained in an acyclic target");
        let bwd = (1..c)
            .rev()
            .find(|&i| !t_target.contains_edge(cycle[i]))
            .unwrap();
        let (fwd_dist, bwd_dist) = (fwd, c - bwd);
        let go_forward = match fwd_dist.cmp(&bwd_dist) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => cycle[1] < cycle[c - 1],
        };
        let walk: Vec<usize> = if go_forward {
            (1..=fwd).collect()
        } else {
            (bwd..c).rev().collect()
        };

        let mut carried = e_in;
        for idx in walk {
            let out = cycle[idx];
            current = current.exchanged_unchecked(carried, out);
            steps.push(ExchangeStep {
                edge_in: carried,
                edge_out: out,
                leaf_count_after: current.leaf_count(),
            });
            profile.push(current.leaf_count());
            carried = out;
        }
    }
    debug_assert_eq!(current.edges(), t_target.edges());
    Ok(ExchangeTrace::new(t.clone(), steps, profile))
}

/// Outcome of the monotone-sequence exploration. `NoneExists` is reported
/// only when the reachable search space was exhausted; a depth or budget
/// stop is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotoneSearch {
    Found(ExchangeTrace),
    NoneExists { explored: usize },
    DepthLimitReached { explored: usize },
    BudgetExhausted { explored: usize },
}

/// Breadth-first search over tree space for a sequence of single edge
/// exchanges with never-decreasing leaf counts from `t` to `t_target`.
/// Visited trees are memoized by canonical edge set; `max_depth` bounds
/// the number of exchanges and `node_budget` the number of trees stored.
pub fn monotone_sequence_search(
    host: &Graph,
    t: &SpanningTree,
    t_target: &SpanningTree,
    max_depth: usize,
    node_budget: usize,
) -> Result<MonotoneSearch> {
    if t.host() != host.fingerprint() || t_target.host() != host.fingerprint() {
        return Err(Error::HostMismatch);
    }
    if t.leaf_count() > t_target.leaf_count() {
        return Err(Error::NotMonotoneEndpoints);
    }
    if t.edges() == t_target.edges() {
        let profile = vec![t.leaf_count()];
        return Ok(MonotoneSearch::Found(ExchangeTrace::new(
            t.clone(),
            Vec::new(),
            profile,
        )));
    }

    let mut nodes = vec![SearchNode {
        tree: t.clone(),
        parent: 0,
        step: None,
    }];
    let mut visited: HashSet<Vec<Edge>> = HashSet::new();
    visited.insert(t.edges().to_vec());

    let mut frontier: VecDeque<usize> = VecDeque::new();
    frontier.push_back(0);
    let mut depth = 0;

    while !frontier.is_empty() {
        if depth == max_depth {
            return Ok(MonotoneSearch::DepthLimitReached {
                explored: nodes.len(),
            });
        }
        depth += 1;
        let mut next_frontier = VecDeque::new();
        while let Some(idx) = frontier.pop_front() {
            let (tree, leaves) = {
                let node = &nodes[idx];
                (node.tree.clone(), node.tree.leaf_count())
            };
            for e_in in host.edges().filter(|&e| !tree.contains_edge(e)) {
                let cycle = fundamental_cycle(host, &tree, e_in)?;
                for &e_out in &cycle[1..] {
                    let candidate = tree.exchanged_unchecked(e_in, e_out);
                    if candidate.leaf_count() < leaves {
                        continue;
                    }
                    let key = candidate.edges().to_vec();
                    if !visited.insert(key) {
                        continue;
                    }
                    if nodes.len() >= node_budget {
                        return Ok(MonotoneSearch::BudgetExhausted {
                            explored: nodes.len(),
                        });
                    }
                    let step = ExchangeStep {
                        edge_in: e_in,
                        edge_out: e_out,
                        leaf_count_after: candidate.leaf_count(),
                    };
                    let reached_target = candidate.edges() == t_target.edges();
                    nodes.push(SearchNode {
                        tree: candidate,
                        parent: idx,
                        step: Some(step),
                    });
                    if reached_target {
                        return Ok(MonotoneSearch::Found(rebuild_trace(t, &nodes)));
                    }
                    next_frontier.push_back(nodes.len() - 1);
                }
            }
        }
        frontier = next_frontier;
    }
    Ok(MonotoneSearch::NoneExists {
        explored: nodes.len(),
    })
}

struct SearchNode {
    tree: SpanningTree,
    parent: usize,
    step: Option<ExchangeStep>,
}

fn rebuild_trace(start: &SpanningTree, nodes: &[SearchNode]) -> ExchangeTrace {
    let mut chain = Vec::new();
    let mut idx = nodes.len() - 1;
    while let Some(step) = nodes[idx].step {
        chain.push(step);
        idx = nodes[idx].parent;
    }
    chain.reverse();
    let mut profile = vec![start.leaf_count()];
    profile.extend(chain.iter().map(|s| s.leaf_count_after));
    ExchangeTrace::new(start.clone(), chain, profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use rand::Rng;

    fn tree(g: &Graph, edges: &[(usize, usize)]) -> SpanningTree {
        SpanningTree::new(g, edges.iter().map(|&(a, b)| Edge::new(a, b))).unwrap()
    }

    #[test]
    fn triangle_exchange_keeps_leaf_count() {
        let g = corpus::complete(3);
        let t = tree(&g, &[(0, 1), (1, 2)]);
        let t2 = exchange_step(&g, &t, Edge::new(0, 2), Edge::new(1, 2)).unwrap();
        assert_eq!(t2.edges(), &[Edge::new(0, 1), Edge::new(0, 2)]);
        assert_eq!(t2.leaf_count(), t.leaf_count());
    }

    #[test]
    fn star_to_path_in_k4_drops_one_leaf() {
        let g = corpus::complete(4);
        let star = tree(&g, &[(0, 1), (0, 2), (0, 3)]);
        let e_in = Edge::new(1, 2);
        let e_out = Edge::new(0, 1);
        let next = exchange_step(&g, &star, e_in, e_out).unwrap();
        assert_eq!(star.leaf_count(), 3);
        assert_eq!(next.leaf_count(), 2);
        // The swapped edges share vertex 1, so the delta is at most 1.
        assert!(e_in.shared_vertex(e_out).is_some());
    }

    #[test]
    fn exchange_rejects_bad_inputs() {
        let g = corpus::cycle(4);
        let t = tree(&g, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            exchange_step(&g, &t, Edge::new(0, 1), Edge::new(1, 2)).unwrap_err(),
            Error::EdgeAlreadyInTree(Edge::new(0, 1))
        );
        assert_eq!(
            exchange_step(&g, &t, Edge::new(0, 3), Edge::new(0, 3)).unwrap_err(),
            Error::IdentityExchange(Edge::new(0, 3))
        );
        // Removing an off-cycle edge would disconnect the tree.
        let k4 = corpus::complete(4);
        let star = tree(&k4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            exchange_step(&k4, &star, Edge::new(1, 2), Edge::new(0, 3)).unwrap_err(),
            Error::EdgeNotOnCycle(Edge::new(0, 3), Edge::new(1, 2))
        );
    }

    #[test]
    fn degree_changes_confined_to_exchange_endpoints() {
        let mut r = corpus::rng(41);
        for _ in 0..40 {
            let n = r.gen_range(4..9);
            let m = r.gen_range(n..=n * (n - 1) / 2);
            let g = corpus::random_connected_graph(&mut r, n, m);
            let t = corpus::random_spanning_tree(&mut r, &g);
            let non_tree: Vec<Edge> = g.edges().filter(|&e| !t.contains_edge(e)).collect();
            if non_tree.is_empty() {
                continue;
            }
            let e_in = non_tree[r.gen_range(0..non_tree.len())];
            let cycle = fundamental_cycle(&g, &t, e_in).unwrap();
            let e_out = cycle[r.gen_range(1..cycle.len())];
            let next = exchange_step(&g, &t, e_in, e_out).unwrap();
            for v in 0..n {
                let before = t.degree(v);
                let after = next.degree(v);
                if e_in.has_endpoint(v) && e_out.has_endpoint(v) {
                    assert_eq!(before, after);
                } else if e_in.has_endpoint(v) {
                    assert_eq!(after, before + 1);
                } else if e_out.has_endpoint(v) {
                    assert_eq!(after, before - 1);
                } else {
                    assert_eq!(before, after);
                }
            }
        }
    }

    #[test]
    fn refine_of_unit_delta_exchange_is_single_tree() {
        let g = corpus::complete(3);
        let t = tree(&g, &[(0, 1), (1, 2)]);
        let refined = refine_exchange(&g, &t, Edge::new(0, 2), Edge::new(1, 2)).unwrap();
        assert_eq!(refined.len(), 1);
        assert_eq!(
            refined[0],
            exchange_step(&g, &t, Edge::new(0, 2), Edge::new(1, 2)).unwrap()
        );
    }

    #[test]
    fn refine_walks_chord_exchange_on_c6() {
        // 6-cycle plus one chord; exchange across the chord and check
        // every intermediate tree.
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::new(6, &edges).unwrap();
        let t = tree(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let e_in = Edge::new(0, 5);
        for e_out in fundamental_cycle(&g, &t, e_in).unwrap()[1..].to_vec() {
            let refined = refine_exchange(&g, &t, e_in, e_out).unwrap();
            let mut prev = t.leaf_count();
            for tr in &refined {
                SpanningTree::new(&g, tr.edges().iter().copied()).unwrap();
                assert!(prev.abs_diff(tr.leaf_count()) <= 1);
                prev = tr.leaf_count();
            }
            assert_eq!(
                refined.last().unwrap(),
                &exchange_step(&g, &t, e_in, e_out).unwrap()
            );
        }
    }

    #[test]
    fn refine_splits_a_two_leaf_jump() {
        // Scan random 8-vertex hosts for an exchange with |delta| = 2
        // (the swapped edges are then necessarily disjoint) and check
        // that refinement inserts the skipped intermediate value.
        let mut r = corpus::rng(97);
        let mut found = false;
        'scan: for _ in 0..50 {
            let g = corpus::random_connected_graph(&mut r, 8, 12);
            let mut trees = Vec::new();
            crate::spectrum::enumerate_spanning_trees(&g, 1 << 20, |t| trees.push(t.clone()))
                .unwrap();
            for t in &trees {
                for e_in in g.edges().filter(|&e| !t.contains_edge(e)) {
                    let cycle = fundamental_cycle(&g, t, e_in).unwrap();
                    for &e_out in &cycle[1..] {
                        let direct = exchange_step(&g, t, e_in, e_out).unwrap();
                        if t.leaf_count().abs_diff(direct.leaf_count()) != 2 {
                            continue;
                        }
                        assert!(e_in.shared_vertex(e_out).is_none());
                        let refined = refine_exchange(&g, t, e_in, e_out).unwrap();
                        assert!(refined.len() >= 2);
                        let mut profile = vec![t.leaf_count()];
                        profile.extend(refined.iter().map(|x| x.leaf_count()));
                        assert!(profile.windows(2).all(|w| w[0].abs_diff(w[1]) <= 1));
                        let skipped = (t.leaf_count() + direct.leaf_count()) / 2;
                        assert!(profile.contains(&skipped));
                        assert_eq!(refined.last().unwrap(), &direct);
                        found = true;
                        break 'scan;
                    }
                }
            }
        }
        assert!(found, "no |delta| = 2 exchange in the scanned corpus");
    }

    #[test]
    fn transform_identity_is_empty() {
        let g = corpus::complete(4);
        let t = tree(&g, &[(0, 1), (0, 2), (0, 3)]);
        let trace = transform_sequence(&g, &t, &t).unwrap();
        assert!(trace.is_empty());
        assert_eq!(trace.leaf_profile(), &[3]);
    }

    #[test]
    fn transform_rejects_foreign_hosts() {
        let g = corpus::complete(4);
        let h = corpus::cycle(4);
        let tg = tree(&g, &[(0, 1), (0, 2), (0, 3)]);
        let th = tree(&h, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            transform_sequence(&g, &tg, &th).unwrap_err(),
            Error::HostMismatch
        );
    }

    #[test]
    fn transform_traces_replay_and_respect_bounds() {
        let mut r = corpus::rng(1234);
        for _ in 0..30 {
            let n = r.gen_range(4..=10);
            let m = r.gen_range(n - 1..=n * (n - 1) / 2);
            let g = corpus::random_connected_graph(&mut r, n, m);
            let a = corpus::random_spanning_tree(&mut r, &g);
            let b = corpus::random_spanning_tree(&mut r, &g);
            let trace = transform_sequence(&g, &a, &b).unwrap();
            assert!(trace.is_refined());
            assert!(trace.len() <= (n / 2) * (n - 1));
            let trees = trace.replay(&g).unwrap();
            assert_eq!(trees.first().unwrap().edges(), a.edges());
            assert_eq!(trees.last().unwrap().edges(), b.edges());
        }
    }

    #[test]
    fn transform_profile_spans_every_intermediate_value() {
        let mut r = corpus::rng(555);
        for _ in 0..20 {
            let g = corpus::random_connected_graph(&mut r, 9, 16);
            let a = corpus::random_spanning_tree(&mut r, &g);
            let b = corpus::random_spanning_tree(&mut r, &g);
            let trace = transform_sequence(&g, &a, &b).unwrap();
            let profile = trace.leaf_profile();
            let lo = *profile.iter().min().unwrap();
            let hi = *profile.iter().max().unwrap();
            for k in lo..=hi {
                assert!(profile.contains(&k));
            }
        }
    }

    #[test]
    fn monotone_search_finds_single_step_in_k4() {
        let g = corpus::complete(4);
        // Path 2-0-1-3 differs from the star at 0 by one exchange.
        let p = tree(&g, &[(0, 2), (0, 1), (1, 3)]);
        let star = tree(&g, &[(0, 1), (0, 2), (0, 3)]);
        match monotone_sequence_search(&g, &p, &star, 8, 100_000).unwrap() {
            MonotoneSearch::Found(trace) => {
                assert_eq!(trace.len(), 1);
                assert!(trace.is_monotone());
                trace.replay(&g).unwrap();
            }
            other => panic!("expected a monotone trace, got {other:?}"),
        }
    }

    #[test]
    fn monotone_search_identity() {
        let g = corpus::cycle(5);
        let t = tree(&g, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        match monotone_sequence_search(&g, &t, &t, 4, 1000).unwrap() {
            MonotoneSearch::Found(trace) => assert!(trace.is_empty()),
            other => panic!("expected empty trace, got {other:?}"),
        }
    }

    #[test]
    fn monotone_search_rejects_decreasing_endpoints() {
        let g = corpus::complete(4);
        let star = tree(&g, &[(0, 1), (0, 2), (0, 3)]);
        let p = tree(&g, &[(0, 2), (0, 1), (1, 3)]);
        assert_eq!(
            monotone_sequence_search(&g, &star, &p, 4, 1000).unwrap_err(),
            Error::NotMonotoneEndpoints
        );
    }

    #[test]
    fn monotone_search_reports_depth_limit() {
        let g = corpus::complete(5);
        let path = tree(&g, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let star = tree(&g, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        match monotone_sequence_search(&g, &path, &star, 0, 1000).unwrap() {
            MonotoneSearch::DepthLimitReached { .. } => {}
            other => panic!("expected depth limit, got {other:?}"),
        }
    }
}
