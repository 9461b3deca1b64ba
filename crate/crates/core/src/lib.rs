//! Berge-saturated hypergraphs: constructions, Berge containment deciders,
//! exhaustive saturation checks, closed-form saturation bounds, and
//! brute-force oracles for cross-checking all of them on small instances.

pub mod berge;
mod bipartite;
pub mod builders;
pub mod canon;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod oracle;
pub mod satcheck;

pub use berge::{
    contains_berge, contains_berge_cycle, contains_berge_general, contains_berge_matching,
    contains_berge_star, longest_berge_path, verify_embedding, BergeEmbedding, Matcher,
    PatternGraph,
};
pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use satcheck::{is_berge_free, is_berge_saturated, SaturationReport, Violation};
