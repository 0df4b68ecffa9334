//! Spanning-tree leaf spectra.
//!
//! For a connected graph `G`, the set of leaf counts achievable by its
//! spanning trees is an integer interval. This crate makes that statement
//! executable: it computes the interval endpoints exactly at desk scale,
//! produces a witness tree with any feasible leaf count by chaining edge
//! exchanges whose per-step leaf delta never exceeds one, explores
//! monotone exchange sequences, and generates the extremal triangulation
//! families the bounds are tight on.
//!
//! The main entry points are [`spectrum::compute_spectrum`],
//! [`spectrum::find_tree_with_k_leaves`], and
//! [`exchange::transform_sequence`]; `construct` holds the graph
//! generators and `io`/`report` the interchange formats used by the CLI.

pub mod connectivity;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod exchange;
pub mod graph;
pub mod io;
pub mod report;
pub mod spectrum;

pub use connectivity::vertex_connectivity_at_least;
pub use error::{Error, Result};
pub use exchange::{ExchangeStep, ExchangeTrace, MonotoneSearch};
pub use graph::{fundamental_cycle, Edge, Graph, GraphFingerprint, SpanningTree};
pub use spectrum::{LeafSpectrum, StemSet};

/// Default cap on enumeration and subset-search work.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
