//! The leaf spectrum L(G): exact endpoints, witnesses for every feasible
//! leaf count, the exhaustive oracle, and related desk-scale searches.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::exchange::transform_sequence;
use crate::graph::{Graph, SpanningTree};

mod cds;
mod enumerate;
mod hamiltonian;
mod hist;
mod remark;

pub use cds::{min_connected_dominating_set, tree_from_stems, StemSet};
pub use enumerate::{enumerate_spanning_trees, kirchhoff_tree_count};
pub use hamiltonian::hamiltonian_path;
pub use hist::find_hist;
pub use remark::{check_stem_leaf_bound, StemLeafReport};

/// The interval of achievable leaf counts, with witness trees for at
/// least both endpoints. `exhaustive` is populated only by the
/// enumeration oracle and then lists every achieved value.
#[derive(Debug, Clone)]
pub struct LeafSpectrum {
    pub min_leaves: usize,
    pub max_leaves: usize,
    pub witnesses: BTreeMap<usize, SpanningTree>,
    pub exhaustive: Option<BTreeSet<usize>>,
}

impl LeafSpectrum {
    /// Whether the exhaustive value set equals `{min, ..., max}` with no
    /// gaps. Vacuously true when the oracle did not run.
    pub fn is_contiguous(&self) -> bool {
        match &self.exhaustive {
            None => true,
            Some(set) => {
                set.iter().copied().eq(self.min_leaves..=self.max_leaves)
            }
        }
    }
}

/// Every achieved leaf count, by visiting all spanning trees. Witnesses
/// are kept for each achieved value (first tree encountered).
pub fn leaf_spectrum_oracle(g: &Graph, budget: u64) -> Result<LeafSpectrum> {
    let mut witnesses: BTreeMap<usize, SpanningTree> = BTreeMap::new();
    enumerate_spanning_trees(g, budget, |t| {
        witnesses.entry(t.leaf_count()).or_insert_with(|| t.clone());
    })?;
    let exhaustive: BTreeSet<usize> = witnesses.keys().copied().collect();
    Ok(LeafSpectrum {
        min_leaves: *exhaustive.first().expect("connected graph has a tree"),
        max_leaves: *exhaustive.last().unwrap(),
        witnesses,
        exhaustive: Some(exhaustive),
    })
}

/// Minimum leaf number with witness. A hamiltonian path settles it at 2
/// immediately; otherwise no tree has fewer than 3 leaves and exhaustive
/// enumeration stops at the first tree attaining 3, or returns the
/// overall minimum.
pub fn min_leaf_exact(g: &Graph, budget: u64) -> Result<(usize, SpanningTree)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if let Some(path) = hamiltonian_path(g) {
        let edges = path
            .windows(2)
            .map(|w| crate::graph::Edge::new(w[0], w[1]));
        let tree = SpanningTree::new(g, edges)?;
        return Ok((tree.leaf_count(), tree));
    }
    // Not traceable: the minimum is at least 3.
    let floor = if n >= 2 { 3 } else { 0 };
    let mut best: Option<SpanningTree> = None;
    enumerate::enumerate_with_control(g, budget, |t| {
        if best.as_ref().is_none_or(|b| t.leaf_count() < b.leaf_count()) {
            best = Some(t.clone());
        }
        if best.as_ref().unwrap().leaf_count() == floor {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    let tree = best.expect("connected graph has a spanning tree");
    Ok((tree.leaf_count(), tree))
}

/// Maximum leaf number with witness: `n` minus the connected domination
/// number, realized by hanging every non-stem vertex off a minimum
/// connected dominating set.
pub fn max_leaf_exact(g: &Graph, budget: u64) -> Result<(usize, SpanningTree)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    assert!(n >= 3, "maximum leaf number needs n >= 3");
    let stems = min_connected_dominating_set(g, budget)?;
    let tree = tree_from_stems(g, &stems)?;
    let max = n - stems.len();
    assert_eq!(
        tree.leaf_count(),
        max,
        "witness from a minimum CDS must attain n - |CDS| leaves"
    );
    Ok((max, tree))
}

/// The full spectrum `[min, max]` with endpoint witnesses. Contiguity of
/// everything in between is what `find_tree_with_k_leaves` realizes
/// constructively.
pub fn compute_spectrum(g: &Graph, budget: u64) -> Result<LeafSpectrum> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n <= 2 {
        let tree = SpanningTree::new(g, g.edges())?;
        let l = tree.leaf_count();
        return Ok(LeafSpectrum {
            min_leaves: l,
            max_leaves: l,
            witnesses: BTreeMap::from([(l, tree)]),
            exhaustive: None,
        });
    }
    let (min_leaves, t_min) = min_leaf_exact(g, budget)?;
    let (max_leaves, t_max) = max_leaf_exact(g, budget)?;
    let mut witnesses = BTreeMap::new();
    witnesses.insert(min_leaves, t_min);
    witnesses.insert(max_leaves, t_max);
    Ok(LeafSpectrum {
        min_leaves,
        max_leaves,
        witnesses,
        exhaustive: None,
    })
}

/// A spanning tree with exactly `k` leaves for any feasible `k`: the
/// endpoint witnesses are connected by a transform sequence whose leaf
/// profile moves by at most 1 per step, so it passes through every value
/// in between.
pub fn find_tree_with_k_leaves(g: &Graph, k: usize, budget: u64) -> Result<SpanningTree> {
    let spectrum = compute_spectrum(g, budget)?;
    if k < spectrum.min_leaves || k > spectrum.max_leaves {
        return Err(Error::InfeasibleLeafCount {
            k,
            min: spectrum.min_leaves,
            max: spectrum.max_leaves,
        });
    }
    if let Some(t) = spectrum.witnesses.get(&k) {
        return Ok(t.clone());
    }
    let t_min = &spectrum.witnesses[&spectrum.min_leaves];
    let t_max = &spectrum.witnesses[&spectrum.max_leaves];
    let trace = transform_sequence(g, t_min, t_max)?;
    let trees = trace.replay(g)?;
    let tree = trees
        .into_iter()
        .find(|t| t.leaf_count() == k)
        .expect("a unit-step profile from min to max passes through k");
    Ok(tree)
}
