//! Randomized check of the subtree stem/leaf bound on 6-regular hosts:
//! a subtree with k stems has at most 2k + 4 leaves.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemLeafReport {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub violations: u64,
    pub max_slack: i64,
    pub min_slack: i64,
}

/// Samples `trials` random subtrees of the 6-regular graph `g` and
/// checks `leaves <= 2 * stems + 4` on each. A subtree is sampled by
/// growing a connected stem set through uniform random frontier
/// expansion (tree edges chosen uniformly among in-set neighbors) and
/// then attaching every adjacent outside vertex as a leaf. Slack is
/// `2 * stems + 4 - leaves`, counted on the realized subtree; the report
/// carries the extremes and the violation count. Deterministic for a
/// fixed `(trials, seed)`.
pub fn check_stem_leaf_bound(g: &Graph, trials: u64, seed: u64) -> Result<StemLeafReport> {
    let n = g.vertex_count();
    for v in 0..n {
        if g.degree(v) != 6 {
            return Err(Error::NotSixRegular {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0u64;
    let mut max_slack = i64::MIN;
    let mut min_slack = i64::MAX;
    for _ in 0..trials {
        let target = rng.gen_range(1..=n);
        let (stems, leaves) = sample_subtree(g, target, &mut rng);
        let slack = 2 * stems as i64 + 4 - leaves as i64;
        if slack < 0 {
            violations += 1;
        }
        max_slack = max_slack.max(slack);
        min_slack = min_slack.min(slack);
    }
    Ok(StemLeafReport {
        n,
        trials,
        seed,
        violations,
        max_slack,
        min_slack,
    })
}

/// Grows a random connected set of `target` vertices, wires it as a
/// random tree, attaches all adjacent outside vertices as leaves, and
/// returns the realized (stems, leaves) counts of the subtree.
fn sample_subtree(g: &Graph, target: usize, rng: &mut impl Rng) -> (usize, usize) {
    let n = g.vertex_count();
    let start = rng.gen_range(0..n);
    let mut in_set = vec![false; n];
    in_set[start] = true;
    let mut members = vec![start];
    let mut degree = vec![0usize; n];
    while members.len() < target {
        let mut frontier: Vec<usize> = (0..n)
            .filter(|&v| !in_set[v] && g.neighbors(v).iter().any(|&w| in_set[w]))
            .collect();
        if frontier.is_empty() {
            break;
        }
        let w = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        let anchors: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| in_set[x])
            .collect();
        let anchor = anchors[rng.gen_range(0..anchors.len())];
        degree[w] += 1;
        degree[anchor] += 1;
        in_set[w] = true;
        members.push(w);
    }
    let mut subtree_size = members.len();
    for v in 0..n {
        if in_set[v] {
            continue;
        }
        let anchors: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| in_set[x])
            .collect();
        if anchors.is_empty() {
            continue;
        }
        let anchor = anchors[rng.gen_range(0..anchors.len())];
        degree[v] += 1;
        degree[anchor] += 1;
        subtree_size += 1;
    }
    let leaves = (0..n).filter(|&v| degree[v] == 1).count();
    let stems = subtree_size - leaves;
    (stems, leaves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn rejects_non_regular_hosts() {
        let g = crate::corpus::cycle(6);
        assert!(matches!(
            check_stem_leaf_bound(&g, 10, 1).unwrap_err(),
            Error::NotSixRegular { .. }
        ));
    }

    #[test]
    fn torus_samples_never_violate() {
        let t = construct::gen_torus_grid(5, 5).unwrap();
        let report = check_stem_leaf_bound(&t.graph, 500, 42).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.min_slack >= 0);
    }

    #[test]
    #[allow(clippy::identity_op)]
    fn single_stem_star_attains_equality() {
        let t = construct::gen_torus_grid(4, 4).unwrap();
        // A one-vertex stem set picks up all six neighbors as leaves.
        let mut degree = [0usize; 16];
        for &w in t.graph.neighbors(0) {
            degree[w] += 1;
            degree[0] += 1;
        }
        let leaves = degree.iter().filter(|&&d| d == 1).count();
        assert_eq!(leaves, 6);
        // Equality in leaves <= 2k + 4 at k = 1.
        assert_eq!(leaves as i64, 2 * 1 + 4);
    }

    #[test]
    fn full_vertex_stem_sets_stay_within_the_bound() {
        // With every vertex a stem candidate the sample degenerates to a
        // random spanning tree; its leaves l still satisfy
        // l <= 2 * (n - l) + 4.
        let t = construct::gen_torus_grid(5, 5).unwrap();
        let mut rng = crate::corpus::rng(3);
        for _ in 0..50 {
            let (stems, leaves) = super::sample_subtree(&t.graph, 25, &mut rng);
            assert_eq!(stems + leaves, 25);
            assert!(leaves as i64 <= 2 * stems as i64 + 4);
        }
    }

    #[test]
    fn reports_are_seed_deterministic() {
        let t = construct::gen_torus_grid(5, 5).unwrap();
        let a = check_stem_leaf_bound(&t.graph, 200, 7).unwrap();
        let b = check_stem_leaf_bound(&t.graph, 200, 7).unwrap();
        assert_eq!(a, b);
    }
}
