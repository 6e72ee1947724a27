//! Exact 1-planarity testing.
//!
//! A graph is 1-planar if it can be drawn in the plane so that every edge is
//! crossed at most once. [`pipeline::analyze`] splits a graph into blocks,
//! decides each block with a pruned backtracking search over the possible
//! crossing pairs, and on success returns a checked 1-planar embedding.
//!
//! ```
//! use oneplanar_core::{analyze, generators, validate, SearchConfig, Verdict};
//!
//! let g = generators::complete(6);
//! let report = analyze(&g, &SearchConfig::default(), "K6");
//! assert_eq!(report.record.verdict, Verdict::OnePlanar);
//! assert!(validate(&g, report.embedding.as_ref().unwrap()));
//! ```

pub mod embed;
pub mod generators;
pub mod graph;
pub mod pairspace;
pub mod pipeline;
pub mod planarity;
pub mod search;

pub use embed::{
    count_crossings, merge_blocks, parse_embedding, planarize, realize, validate, write_embedding, EmbedError,
    FormatError, OnePlanarEmbedding, Planarization,
};
pub use graph::{biconnected_components, Block, BlockDecomposition, EdgeId, EdgeSet, Graph, GraphError, VertexId};
pub use pairspace::{build_restricted_universe, build_universe, PairUniverse, PartialSolution};
pub use pipeline::{analyze, analyze_with_oracle, run_pipeline, InstanceRecord, PipelineReport, Verdict};
pub use planarity::{euler_check, test_planarity, PlanarityVerdict, RotationSystem};
pub use search::{
    backtrack, find_kite_edges, find_skew_set, oracle_is_one_planar, test_block, verify_node, BlockResult,
    BlockVerdict, CutReason, NodeVerdict, SearchConfig, SearchError, SearchStats, SolutionKind,
};
