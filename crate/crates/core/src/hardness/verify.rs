//! End-to-end check of the reduction against the reference oracles.

use serde::Serialize;

use super::cnf::CnfFormula;
use super::reduce::reduce;
use crate::error::Result;
use crate::oracle::{oracle_min_fvs, oracle_min_ifvs, sat_2p1n};
use crate::Limits;

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub variables: usize,
    pub clauses: usize,
    pub vertices: usize,
    pub threshold: usize,
    pub max_degree: usize,
    pub spider_free: bool,
    pub satisfiable: bool,
    pub min_fvs: usize,
    /// `None` when the graph has no independent feedback vertex set.
    pub min_ifvs: Option<usize>,
    /// For satisfiable formulas: whether the assignment's `x y p t` /
    /// `z a b c` choice is an independent FVS of size exactly the threshold.
    pub assignment_set_valid: Option<bool>,
    pub fvs_iff_sat: bool,
    pub ifvs_iff_sat: bool,
}

impl ReductionReport {
    pub fn consistent(&self) -> bool {
        self.fvs_iff_sat
            && self.ifvs_iff_sat
            && self.spider_free
            && self.max_degree <= 4
            && self.assignment_set_valid != Some(false)
    }
}

/// Builds the reduction and compares satisfiability with the minimum FVS and
/// IFVS sizes. Oracle calls use the `reduction` vertex cap.
pub fn verify_reduction(f: &CnfFormula, limits: &Limits) -> Result<ReductionReport> {
    let out = reduce(f)?;
    let g = &out.graph;
    let oracle_limits = Limits {
        oracle: limits.reduction,
        oracle_subcubic: limits.reduction.max(limits.oracle_subcubic),
        ..*limits
    };
    let assignment = sat_2p1n(f)?;
    let min_fvs = oracle_min_fvs(g, &oracle_limits)?.len();
    let min_ifvs = oracle_min_ifvs(g, &oracle_limits)?.map(|s| s.len());
    let satisfiable = assignment.is_some();
    let assignment_set_valid = assignment.as_ref().map(|a| {
        let set = out.assignment_set(a);
        set.len() == out.threshold && g.is_feedback_vertex_set(&set) && g.is_independent_set(&set)
    });
    Ok(ReductionReport {
        variables: f.variables,
        clauses: f.clauses.len(),
        vertices: g.n(),
        threshold: out.threshold,
        max_degree: g.max_degree(),
        // `reduce` refuses to return a graph containing the spider.
        spider_free: true,
        satisfiable,
        min_fvs,
        min_ifvs,
        assignment_set_valid,
        fvs_iff_sat: (min_fvs <= out.threshold) == satisfiable,
        ifvs_iff_sat: min_ifvs.is_some_and(|k| k <= out.threshold) == satisfiable,
    })
}
