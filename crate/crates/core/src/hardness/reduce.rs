//! Builds the feedback vertex set instance for a 2P1N-3SAT formula.
//!
//! Each variable gets a copy of the gadget. Each clause becomes a cycle of
//! twice its length whose even positions are the gadget vertices of its
//! literals: the first positive occurrence of a variable uses `x`, the second
//! `y`, and the negative occurrence `z`. The odd positions are fresh.

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::cnf::CnfFormula;
use super::gadget::{self, build_variable_gadget, GADGET_SIZE, LABELS};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subgraph::{contains_spider, SpiderPattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Occurrence {
    FirstPositive,
    SecondPositive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiteralSlot {
    /// 1-based, as in DIMACS.
    pub variable: usize,
    pub occurrence: Occurrence,
    /// 0-based clause index.
    pub clause: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionOutput {
    #[serde(skip)]
    pub graph: Graph,
    pub vertices: usize,
    pub edges: usize,
    /// An FVS of at most this size exists iff the formula is satisfiable.
    pub threshold: usize,
    pub literal_map: Vec<LiteralSlot>,
    /// SHA-256 of the formula in DIMACS form.
    pub formula_digest: String,
}

impl ReductionOutput {
    /// Host id of a gadget vertex of variable `var` (1-based).
    pub fn gadget_vertex(&self, var: usize, role: usize) -> usize {
        (var - 1) * GADGET_SIZE + role
    }

    /// The solution the satisfying assignment `assignment` induces: `x y p t`
    /// for true variables, `z a b c` for false ones.
    pub fn assignment_set(&self, assignment: &[bool]) -> VertexSet {
        let mut set: VertexSet = assignment
            .iter()
            .enumerate()
            .flat_map(|(i, &value)| {
                let roles = if value { gadget::TRUE_SET } else { gadget::FALSE_SET };
                roles.map(|r| self.gadget_vertex(i + 1, r))
            })
            .collect();
        set.sort_unstable();
        set
    }
}

pub fn formula_digest(f: &CnfFormula) -> String {
    hex::encode(Sha256::digest(f.to_dimacs().as_bytes()))
}

pub fn reduce(f: &CnfFormula) -> Result<ReductionOutput> {
    f.validate_2p1n()?;
    let base = &build_variable_gadget().graph;
    let n = f.variables;
    let mut edges = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for var in 1..=n {
        let off = (var - 1) * GADGET_SIZE;
        edges.extend(base.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        labels.extend(LABELS.iter().map(|l| format!("v{var}.{l}")));
    }
    let mut positives_seen = vec![0usize; n + 1];
    let mut literal_map = Vec::new();
    for (ci, clause) in f.clauses.iter().enumerate() {
        let mut ring = Vec::with_capacity(2 * clause.len());
        for (li, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            let (occurrence, role) = if lit < 0 {
                (Occurrence::Negative, gadget::Z)
            } else {
                positives_seen[var] += 1;
                if positives_seen[var] == 1 {
                    (Occurrence::FirstPositive, gadget::X)
                } else {
                    (Occurrence::SecondPositive, gadget::Y)
                }
            };
            let vertex = (var - 1) * GADGET_SIZE + role;
            literal_map.push(LiteralSlot {
                variable: var,
                occurrence,
                clause: ci,
                vertex,
            });
            ring.push(vertex);
            ring.push(labels.len());
            labels.push(format!("c{}.{li}", ci + 1));
        }
        for i in 0..ring.len() {
            edges.push((ring[i], ring[(i + 1) % ring.len()]));
        }
    }
    let mut graph = Graph::from_edges(labels.len(), edges)?;
    for (v, l) in labels.into_iter().enumerate() {
        graph.set_label(v, l);
    }
    if graph.max_degree() > 4 {
        return Err(Error::Invariant(format!(
            "reduction output has maximum degree {}",
            graph.max_degree()
        )));
    }
    let spider = SpiderPattern::new(2, 2, 2, 2)?;
    if let Some(emb) = contains_spider(&graph, &spider) {
        return Err(Error::Invariant(format!(
            "reduction output contains {spider} at {emb:?}"
        )));
    }
    Ok(ReductionOutput {
        vertices: graph.n(),
        edges: graph.m(),
        graph,
        threshold: 4 * n,
        literal_map,
        formula_digest: formula_digest(f),
    })
}
