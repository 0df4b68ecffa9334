//! JSON-shaped documents for traces and spectrum reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exchange::{ExchangeStep, ExchangeTrace};
use crate::graph::{Edge, Graph, SpanningTree};
use crate::spectrum::LeafSpectrum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    #[serde(rename = "in")]
    pub edge_in: (usize, usize),
    #[serde(rename = "out")]
    pub edge_out: (usize, usize),
    pub leaves_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub start_edges: Vec<(usize, usize)>,
    pub steps: Vec<StepDoc>,
    pub leaf_profile: Vec<usize>,
}

impl TraceDoc {
    pub fn from_trace(trace: &ExchangeTrace) -> Self {
        TraceDoc {
            start_edges: trace
                .start()
                .edges()
                .iter()
                .map(|e| e.endpoints())
                .collect(),
            steps: trace
                .steps()
                .iter()
                .map(|s| StepDoc {
                    edge_in: s.edge_in.endpoints(),
                    edge_out: s.edge_out.endpoints(),
                    leaves_after: s.leaf_count_after,
                })
                .collect(),
            leaf_profile: trace.leaf_profile().to_vec(),
        }
    }

    /// Rebuilds the trace against `host` and replays every step with
    /// full validation.
    pub fn into_trace(&self, host: &Graph) -> Result<ExchangeTrace> {
        let start_edges: Result<Vec<Edge>> = self
            .start_edges
            .iter()
            .map(|&(a, b)| Edge::try_new(a, b))
            .collect();
        let start = SpanningTree::new(host, start_edges?)?;
        let mut current = start.clone();
        let mut steps = Vec::with_capacity(self.steps.len());
        for doc in &self.steps {
            let step = ExchangeStep {
                edge_in: Edge::try_new(doc.edge_in.0, doc.edge_in.1)?,
                edge_out: Edge::try_new(doc.edge_out.0, doc.edge_out.1)?,
                leaf_count_after: doc.leaves_after,
            };
            current =
                crate::exchange::exchange_step(host, &current, step.edge_in, step.edge_out)?;
            steps.push(step);
        }
        let trace = ExchangeTrace::from_validated_parts(start, steps, self.leaf_profile.clone())?;
        trace.replay(host)?;
        Ok(trace)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub n: usize,
    pub m: usize,
    pub min_leaves: usize,
    pub max_leaves: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<Vec<usize>>,
    pub witness_edges_by_k: BTreeMap<usize, Vec<(usize, usize)>>,
}

impl SpectrumDoc {
    pub fn new(g: &Graph, spectrum: &LeafSpectrum) -> Self {
        SpectrumDoc {
            n: g.vertex_count(),
            m: g.edge_count(),
            min_leaves: spectrum.min_leaves,
            max_leaves: spectrum.max_leaves,
            exhaustive: spectrum
                .exhaustive
                .as_ref()
                .map(|set| set.iter().copied().collect()),
            witness_edges_by_k: spectrum
                .witnesses
                .iter()
                .map(|(&k, t)| (k, t.edges().iter().map(|e| e.endpoints()).collect()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exchange::transform_sequence;
    use crate::spectrum::leaf_spectrum_oracle;

    #[test]
    fn trace_doc_round_trips_through_json() {
        let mut r = corpus::rng(5);
        let g = corpus::random_connected_graph(&mut r, 8, 14);
        let a = corpus::random_spanning_tree(&mut r, &g);
        let b = corpus::random_spanning_tree(&mut r, &g);
        let trace = transform_sequence(&g, &a, &b).unwrap();
        let doc = TraceDoc::from_trace(&trace);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: TraceDoc = serde_json::from_str(&json).unwrap();
        let rebuilt = parsed.into_trace(&g).unwrap();
        assert_eq!(rebuilt.leaf_profile(), trace.leaf_profile());
        assert_eq!(rebuilt.steps(), trace.steps());
    }

    #[test]
    fn step_fields_use_in_out_names() {
        let doc = StepDoc {
            edge_in: (0, 1),
            edge_out: (1, 2),
            leaves_after: 3,
        };
        let json = serde_json::to_value(&doc).unwrap();
        assert!(json.get("in").is_some());
        assert!(json.get("out").is_some());
        assert!(json.get("leaves_after").is_some());
    }

    #[test]
    fn spectrum_doc_shape() {
        let g = corpus::wheel(5);
        let spectrum = leaf_spectrum_oracle(&g, 1 << 20).unwrap();
        let doc = SpectrumDoc::new(&g, &spectrum);
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["m"], 8);
        assert_eq!(json["min_leaves"], 2);
        assert_eq!(json["max_leaves"], 4);
        assert_eq!(json["exhaustive"], serde_json::json!([2, 3, 4]));
        assert!(json["witness_edges_by_k"].get("3").is_some());
    }
}
