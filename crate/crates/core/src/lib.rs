//! Exact solvers for feedback vertex set and related problems on graph
//! classes defined by forbidden subdivided stars.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`], [`blocks`], [`cactus`], [`treedepth`], [`generate`] and
//!   [`enumerate`] hold the graph model and structural primitives.
//! - [`subgraph`] decides containment of small patterns and spiders.
//! - [`ifvs`] computes minimum independent feedback vertex sets of
//!   subcubic graphs.
//! - [`oracle`] holds brute-force reference solvers for every problem.
//! - [`meta`] splits instances at bridges into subcubic and bounded-treedepth
//!   parts and merges the part solutions.
//! - [`hardness`] builds feedback vertex set instances from restricted 3-SAT
//!   formulas.

pub mod blocks;
pub mod cli;
pub mod cactus;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hardness;
pub mod ifvs;
pub mod meta;
pub mod oracle;
pub mod subgraph;
pub mod treedepth;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Subgraph, VertexSet};

use serde::Serialize;

/// Serialises with object keys in sorted order, so that parsing and
/// re-serialising the output reproduces it byte for byte.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialise");
    serde_json::to_string_pretty(&v).expect("values serialise")
}

/// Size limits for the exponential engines. Inputs above a limit are
/// rejected with [`Error::Capacity`] rather than run indefinitely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Vertex cap for the reference oracles on general graphs.
    pub oracle: usize,
    /// Vertex cap for the feedback vertex set oracles on subcubic graphs.
    pub oracle_subcubic: usize,
    /// Vertex cap for the matching cut oracle.
    pub matching_cut: usize,
    /// Vertex cap for the branching FVS solver on general graphs.
    pub fvs_exact: usize,
    /// Vertex cap for the branching FVS solver on subcubic graphs.
    pub fvs_exact_subcubic: usize,
    /// Vertex cap for exact treedepth and longest paths.
    pub treedepth: usize,
    /// Vertex cap for patterns in general subgraph search.
    pub pattern: usize,
    /// Vertex cap for the FVS oracles when checking reduction outputs, which
    /// are sparse enough for the bounds to prune well.
    pub reduction: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle: 18,
            oracle_subcubic: 40,
            matching_cut: 16,
            fvs_exact: 18,
            fvs_exact_subcubic: 60,
            treedepth: 20,
            pattern: subgraph::DEFAULT_PATTERN_CAP,
            reduction: 80,
        }
    }
}
