//! Minimum independent feedback vertex sets of connected subcubic graphs.
//!
//! Apart from `K4`, every connected subcubic graph has an independent
//! feedback vertex set as small as its minimum feedback vertex set, and one
//! made of degree-3 vertices exactly when it is not a very nice cactus.

pub mod seed;
pub mod transform;

use std::collections::VecDeque;

use serde::Serialize;

use crate::cactus::{cactus_classify, cycle_blocks, CactusClass};
use crate::error::{Error, Result};
use crate::graph::{to_vertex_set, Graph, VertexSet};
use crate::Limits;

pub use seed::min_fvs_exact;
pub use transform::{
    complete_ifvs, make_nice_cactus, make_nice_cactus_traced, normalize_degree3, TransformState,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IfvsOutcome {
    Solution {
        set: VertexSet,
        /// Every member has degree 3.
        degree3_only: bool,
    },
    /// The graph is `K4`, which has no independent feedback vertex set.
    NoIfvsK4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IfvsResult {
    pub outcome: IfvsOutcome,
    /// Size of a minimum feedback vertex set, which the solution matches.
    pub size_certificate: usize,
}

impl IfvsResult {
    pub fn set(&self) -> Option<&VertexSet> {
        match &self.outcome {
            IfvsOutcome::Solution { set, .. } => Some(set),
            IfvsOutcome::NoIfvsK4 => None,
        }
    }

    pub fn degree3_only(&self) -> Option<bool> {
        match self.outcome {
            IfvsOutcome::Solution { degree3_only, .. } => Some(degree3_only),
            IfvsOutcome::NoIfvsK4 => None,
        }
    }
}

/// In each cycle of a very nice cactus, the vertex farthest from vertex 0
/// (lowest id on ties). Every edge between two cycles has an endpoint that
/// is its cycle's nearest vertex to vertex 0, which is never chosen, so the
/// choices are pairwise nonadjacent.
fn farthest_per_cycle(g: &Graph) -> VertexSet {
    let mut dist = vec![usize::MAX; g.n()];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    to_vertex_set(cycle_blocks(g).iter().map(|c| {
        *c.iter()
            .max_by_key(|&&v| (dist[v], std::cmp::Reverse(v)))
            .expect("cycles are nonempty")
    }))
}

/// A minimum independent feedback vertex set of a connected subcubic graph.
///
/// Trees and very nice cacti (cycles included) are answered directly.
/// Otherwise a minimum feedback vertex set from [`min_fvs_exact`] is moved
/// onto degree-3 vertices and transformed into an independent one of the
/// same size.
pub fn min_ifvs_subcubic(g: &Graph, limits: &Limits) -> Result<IfvsResult> {
    if !g.is_connected() {
        return Err(Error::Validation(
            "subcubic IFVS needs a connected graph; solve components separately".into(),
        ));
    }
    if !g.is_subcubic() {
        return Err(Error::Validation(format!(
            "subcubic IFVS needs maximum degree 3, found {}",
            g.max_degree()
        )));
    }
    if g.n() == 4 && g.is_complete() {
        return Ok(IfvsResult {
            outcome: IfvsOutcome::NoIfvsK4,
            size_certificate: 2,
        });
    }
    if g.is_forest() {
        return Ok(IfvsResult {
            outcome: IfvsOutcome::Solution {
                set: Vec::new(),
                degree3_only: true,
            },
            size_certificate: 0,
        });
    }
    if cactus_classify(g)? == CactusClass::VeryNiceCactus {
        let set = farthest_per_cycle(g);
        return Ok(IfvsResult {
            size_certificate: set.len(),
            outcome: IfvsOutcome::Solution {
                set,
                degree3_only: false,
            },
        });
    }
    let seed = min_fvs_exact(g, limits)?;
    let f = normalize_degree3(g, &seed)?;
    let state = make_nice_cactus(TransformState::new(g.clone(), f)?)?;
    let set = complete_ifvs(&state)?;
    if set.len() != seed.len() {
        return Err(Error::Invariant(format!(
            "independent set has size {} but the minimum FVS has size {}",
            set.len(),
            seed.len()
        )));
    }
    Ok(IfvsResult {
        size_certificate: seed.len(),
        outcome: IfvsOutcome::Solution {
            set,
            degree3_only: true,
        },
    })
}
