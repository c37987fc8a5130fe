//! Checks of the treedepth bounds for graphs excluding `S_{1,1,q,r}` or
//! `S_{1,1,1,r}`.
//!
//! A connected graph that is not subcubic, has no proper bridge and contains
//! no `S_{1,1,q,r}` has treedepth at most `2(q+r+3)^2 + 6`. Without the
//! bridge condition, excluding `S_{1,1,1,r}` gives at most `2r + 2`.

use serde::Serialize;

use crate::blocks::bridges_and_blocks;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::subgraph::{contains_spider, Embedding, SpiderPattern};
use crate::treedepth::{longest_path_length, treedepth, Treedepth};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    /// Premise and bound both hold.
    Holds,
    /// The premise fails, so the bound says nothing.
    Vacuous,
    /// Premise holds and the exact treedepth exceeds the bound.
    Violated,
    /// Premise holds, but only an upper bound above the limit is known.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub pattern: String,
    pub bound: usize,
    /// Whether the graph contains the pattern, with one copy if so.
    pub pattern_copy: Option<Embedding>,
    pub premise: bool,
    pub status: BoundStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub q: usize,
    pub r: usize,
    pub vertices: usize,
    pub not_subcubic: bool,
    pub proper_bridges: Vec<Edge>,
    pub treedepth: Treedepth,
    /// Edges on a longest path, when under the treedepth cap. A graph of
    /// treedepth `d` has a path with at least `d - 1` edges.
    pub longest_path: Option<usize>,
    /// `2(q+r+3)^2 + 6` under the `S_{1,1,q,r}`-free, quasi-bridgeless premise.
    pub quadratic: BoundCheck,
    /// `2r + 2` under the `S_{1,1,1,r}`-free premise.
    pub linear: BoundCheck,
}

impl StructureReport {
    /// Whether neither bound is contradicted.
    pub fn consistent(&self) -> bool {
        self.quadratic.status != BoundStatus::Violated
            && self.linear.status != BoundStatus::Violated
            && self
                .longest_path
                .is_none_or(|p| !self.treedepth.is_exact() || p + 1 >= self.treedepth.value())
    }
}

pub fn quadratic_bound(q: usize, r: usize) -> usize {
    2 * (q + r + 3).pow(2) + 6
}

pub fn linear_bound(r: usize) -> usize {
    2 * r + 2
}

fn status(premise: bool, td: Treedepth, bound: usize) -> BoundStatus {
    match (premise, td) {
        (false, _) => BoundStatus::Vacuous,
        (true, t) if t.value() <= bound => BoundStatus::Holds,
        (true, Treedepth::Exact(_)) => BoundStatus::Violated,
        (true, Treedepth::UpperBound(_)) => BoundStatus::Inconclusive,
    }
}

pub fn check_structure_theorem(g: &Graph, q: usize, r: usize, limits: &Limits) -> Result<StructureReport> {
    if q == 0 || r == 0 {
        return Err(Error::Validation("q and r must be positive".into()));
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Validation("structure checks need a connected graph".into()));
    }
    let not_subcubic = !g.is_subcubic();
    let proper_bridges = bridges_and_blocks(g).proper_bridges;
    let td = treedepth(g, limits.treedepth);
    let longest_path = longest_path_length(g, limits.treedepth).ok();
    let check = |pattern: SpiderPattern, extra: bool, bound: usize| {
        let copy = contains_spider(g, &pattern);
        let premise = not_subcubic && extra && copy.is_none();
        BoundCheck {
            pattern: pattern.to_string(),
            bound,
            pattern_copy: copy,
            premise,
            status: status(premise, td, bound),
        }
    };
    Ok(StructureReport {
        q,
        r,
        vertices: g.n(),
        not_subcubic,
        quadratic: check(SpiderPattern::new(1, 1, q, r)?, proper_bridges.is_empty(), quadratic_bound(q, r)),
        linear: check(SpiderPattern::new(1, 1, 1, r)?, true, linear_bound(r)),
        proper_bridges,
        treedepth: td,
        longest_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, star};

    #[test]
    fn bounds() {
        assert_eq!(quadratic_bound(1, 1), 56);
        assert_eq!(linear_bound(3), 8);
    }

    #[test]
    fn star_with_long_tail_is_vacuous() {
        // K_{1,4} with a path of length 5 hanging off one leaf.
        let mut edges = star(4).unwrap().edges();
        edges.extend([(1, 5), (5, 6), (6, 7), (7, 8), (8, 9)]);
        let g = Graph::from_edges(10, edges).unwrap();
        let rep = check_structure_theorem(&g, 1, 3, &Limits::default()).unwrap();
        assert!(rep.linear.pattern_copy.is_some());
        assert_eq!(rep.linear.status, BoundStatus::Vacuous);
        assert!(rep.consistent());
    }

    #[test]
    fn k5_contains_the_claw() {
        let rep = check_structure_theorem(&complete(5).unwrap(), 1, 1, &Limits::default()).unwrap();
        assert!(!rep.quadratic.premise);
        assert_eq!(rep.treedepth, Treedepth::Exact(5));
        // S_{2,1,1,1} needs six vertices, so K5 is free of it.
        let rep = check_structure_theorem(&complete(5).unwrap(), 2, 1, &Limits::default()).unwrap();
        assert!(rep.quadratic.premise);
        assert_eq!(rep.quadratic.status, BoundStatus::Holds);
        assert_eq!(rep.linear.status, BoundStatus::Vacuous);
        let rep = check_structure_theorem(&complete(5).unwrap(), 1, 2, &Limits::default()).unwrap();
        assert_eq!(rep.linear.status, BoundStatus::Holds);
    }

    #[test]
    fn rejects_bad_input() {
        let lim = Limits::default();
        assert!(check_structure_theorem(&complete(3).unwrap(), 0, 1, &lim).is_err());
        assert!(check_structure_theorem(&Graph::new(2), 1, 1, &lim).is_err());
    }
}
