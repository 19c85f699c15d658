//! Exact counting of dominating sets in a graph and its complement.
//!
//! For a graph `G` on `n` vertices, `∂(G)` is the number of vertex sets `S`
//! with `N[S] = V`. This crate computes `∂(G) + ∂(Ḡ)` exactly, evaluates the
//! known upper bounds on that sum, and runs exhaustive campaigns checking
//! that no graph of a given order beats the balanced complete bipartite
//! graph `K_{⌊n/2⌋,⌈n/2⌉}`.
//!
//! ```
//! use domsum::{summarize, Graph};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let s = summarize(&c5).unwrap();
//! assert_eq!((s.count_g, s.count_gbar, s.sum), (21, 21, 42));
//! assert_eq!(s.sum, (1 << 5) + s.upsilon);
//! ```
//!
//! Modules:
//!
//! - [`graph`], [`graph6`], [`canon`]: bit-mask graphs, interchange, canonical labelling
//! - [`count`]: brute-force, inclusion-exclusion and fused counting
//! - [`bounds`]: per-vertex and order-wide bounds, degree window, gap table
//! - [`enumerate`]: labelled, isomorphism-free and file-backed graph streams
//! - [`campaign`]: parallel, checkpointed verification of one order
//! - [`experiments`]: edge moves, one-vertex induction, multipartite scan
//! - [`cli`]: the `domsum` command line

pub mod bounds;
pub mod campaign;
pub mod canon;
pub mod cli;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod graph6;

pub use bounds::{
    best_lemma_bound, conjecture_value, degree_window_check, gap_table, lemma_k_bound, theorem1_bound,
    BoundReport, GapRow,
};
pub use campaign::{verify_order, CampaignConfig, CampaignReport, Mode, SearchState};
pub use canon::{canonical_form, canonicalize, CanonicalForm};
pub use count::{
    count_dominating_brute, count_dominating_ie, is_dominating, multipartite_sum, summarize, upsilon, Count,
    Counter, DominationSummary,
};
pub use enumerate::{generate_nonisomorphic, ingest_graph6, labeled_stream, GraphStream, SourceDescriptor};
pub use error::{Error, Result};
pub use experiments::{edge_move_analysis, induction_gap_experiment, multipartite_scan};
pub use graph::{Graph, NeighborhoodTable, PartitionSpec};
pub use graph6::{parse_graph6, write_graph6};
