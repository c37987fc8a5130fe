//! Whole-graph solving by splitting at bridges and merging part solutions.

use std::collections::VecDeque;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::brooks::brooks_colouring;
use super::decompose::{decompose_ct, PartKind};
use crate::blocks::bridges_and_blocks;
use crate::error::{Error, Result};
use crate::graph::{to_vertex_set, Edge, Graph, Subgraph, VertexSet};
use crate::ifvs::{min_fvs_exact, min_ifvs_subcubic};
use crate::oracle::check::{check_colouring, check_cvc, check_fvs, check_ifvs, check_matching_cut};
use crate::oracle::{oracle_chromatic, oracle_matching_cut, oracle_min_cvc_with, oracle_min_fvs, oracle_min_ifvs, ProblemKind};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Vertices(VertexSet),
    /// Colour of each vertex, numbered from 0.
    Colouring(Vec<usize>),
    Edges(Vec<Edge>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    /// Forests, single edges and other pieces with an immediate answer.
    Trivial,
    IfvsSubcubic,
    FvsBranching,
    BrooksGreedy,
    /// A bridge settles the instance.
    BridgeRule,
    /// More than one component has edges, so no connected cover exists.
    ComponentRule,
    OracleFvs,
    OracleIfvs,
    OracleCvc,
    OracleColouring,
    OracleMatchingCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    /// A connected component of the input.
    Component,
    /// A component left after deleting bridges.
    Block,
    /// A block together with its incident bridges.
    BlockWithBridges,
    CType,
    TType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteStep {
    pub component: usize,
    pub piece: PieceKind,
    /// Smallest host vertex of the piece, identifying it.
    pub anchor: usize,
    pub vertices: usize,
    pub engine: Engine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub ok: bool,
    pub detail: String,
    /// Connecting bridges with both endpoints in an IFVS witness. Nonempty
    /// would contradict the merge argument; reported, never repaired.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub independence_violations: Vec<Edge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub problem: ProblemKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub vertices: usize,
    pub edges: usize,
    /// Whether a solution exists (for colouring: with `k` colours).
    pub decision: bool,
    /// Minimum size for FVS, IFVS and CVC; chromatic number for colouring.
    pub value: Option<usize>,
    pub witness: Option<Witness>,
    pub route: Vec<RouteStep>,
    pub validation: Validation,
    /// SHA-256 of the edge list, for matching reports to inputs.
    pub input_digest: String,
}

pub fn graph_digest(g: &Graph) -> String {
    let mut text = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Prefixes a capacity error with the piece it came from.
fn in_piece<T>(r: Result<T>, piece: PieceKind, anchor: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Capacity { what, size, limit } => Error::Capacity {
            what: format!("{piece:?} part at vertex {anchor}: {what}"),
            size,
            limit,
        },
        other => other,
    })
}

struct Outcome {
    decision: bool,
    value: Option<usize>,
    witness: Option<Witness>,
    route: Vec<RouteStep>,
    violations: Vec<Edge>,
}

/// Component index of every vertex.
fn component_index(g: &Graph) -> Vec<usize> {
    let mut of = vec![0; g.n()];
    for (i, c) in g.components().iter().enumerate() {
        for &v in c {
            of[v] = i;
        }
    }
    of
}

/// Components of the graph without its bridges, each with its subgraph.
fn blocks(g: &Graph, bridges: &[Edge]) -> Vec<Subgraph> {
    g.without_edges(bridges)
        .components()
        .iter()
        .map(|b| g.induced_subgraph(b))
        .collect()
}

fn step(component: usize, piece: PieceKind, sub: &Subgraph, engine: Engine) -> RouteStep {
    RouteStep {
        component,
        piece,
        anchor: sub.to_host[0],
        vertices: sub.graph.n(),
        engine,
    }
}

fn solve_fvs(g: &Graph, limits: &Limits) -> Result<Outcome> {
    let bridges = bridges_and_blocks(g).bridges;
    let comp = component_index(g);
    let mut set = Vec::new();
    let mut route = Vec::new();
    for b in blocks(g, &bridges) {
        let anchor = b.to_host[0];
        let (local, engine) = if b.graph.is_forest() {
            (Vec::new(), Engine::Trivial)
        } else if b.graph.is_subcubic() {
            (min_fvs_exact(&b.graph, limits)?, Engine::FvsBranching)
        } else {
            (in_piece(oracle_min_fvs(&b.graph, limits), PieceKind::Block, anchor)?, Engine::OracleFvs)
        };
        set.extend(b.lift(&local));
        route.push(step(comp[anchor], PieceKind::Block, &b, engine));
    }
    let set = to_vertex_set(set);
    Ok(Outcome {
        decision: true,
        value: Some(set.len()),
        witness: Some(Witness::Vertices(set)),
        route,
        violations: Vec::new(),
    })
}

/// IFVS of a connected subcubic graph; `None` for `K4`.
fn subcubic_ifvs(g: &Graph, limits: &Limits) -> Result<Option<VertexSet>> {
    Ok(min_ifvs_subcubic(g, limits)?.set().cloned())
}

fn solve_ifvs(g: &Graph, limits: &Limits) -> Result<Outcome> {
    let mut set = Vec::new();
    let mut route = Vec::new();
    let mut violations = Vec::new();
    let mut feasible = true;
    for (ci, c) in g.connected_components().into_iter().enumerate() {
        if c.graph.is_forest() {
            route.push(step(ci, PieceKind::Component, &c, Engine::Trivial));
            continue;
        }
        if c.graph.is_subcubic() {
            route.push(step(ci, PieceKind::Component, &c, Engine::IfvsSubcubic));
            match subcubic_ifvs(&c.graph, limits)? {
                Some(local) => set.extend(c.lift(&local)),
                None => feasible = false,
            }
            continue;
        }
        let parts = decompose_ct(&c.graph, limits)?;
        let mut chosen = vec![false; c.graph.n()];
        for part in &parts.parts {
            let sub = &part.subgraph;
            let anchor = c.to_host[sub.to_host[0]];
            let (piece, engine, local) = match part.kind {
                // Connecting bridges are not in the part, so their endpoints
                // have degree at most 2 here and are never chosen.
                PartKind::CType => (PieceKind::CType, Engine::IfvsSubcubic, subcubic_ifvs(&sub.graph, limits)?),
                PartKind::TType if sub.graph.is_forest() => (PieceKind::TType, Engine::Trivial, Some(Vec::new())),
                PartKind::TType => (
                    PieceKind::TType,
                    Engine::OracleIfvs,
                    in_piece(oracle_min_ifvs(&sub.graph, limits), PieceKind::TType, anchor)?,
                ),
            };
            route.push(RouteStep {
                component: ci,
                piece,
                anchor,
                vertices: sub.graph.n(),
                engine,
            });
            match local {
                Some(local) => {
                    for v in sub.lift(&local) {
                        chosen[v] = true;
                    }
                }
                None => feasible = false,
            }
        }
        for b in &parts.connecting_bridges {
            let (u, v) = b.edge;
            if chosen[u] && chosen[v] {
                violations.push(c.lift_edge(b.edge));
            }
        }
        set.extend(c.lift(&(0..c.graph.n()).filter(|&v| chosen[v]).collect::<Vec<_>>()));
    }
    if !feasible {
        return Ok(Outcome {
            decision: false,
            value: None,
            witness: None,
            route,
            violations,
        });
    }
    let set = to_vertex_set(set);
    Ok(Outcome {
        decision: true,
        value: Some(set.len()),
        witness: Some(Witness::Vertices(set)),
        route,
        violations,
    })
}

fn solve_cvc(g: &Graph, limits: &Limits) -> Result<Outcome> {
    let with_edges: Vec<Subgraph> = g
        .connected_components()
        .into_iter()
        .filter(|c| c.graph.m() > 0)
        .collect();
    let comp = component_index(g);
    let none = |route| Outcome {
        decision: false,
        value: None,
        witness: None,
        route,
        violations: Vec::new(),
    };
    let found = |set: VertexSet, route| Outcome {
        decision: true,
        value: Some(set.len()),
        witness: Some(Witness::Vertices(set)),
        route,
        violations: Vec::new(),
    };
    match with_edges.len() {
        0 => return Ok(found(Vec::new(), Vec::new())),
        1 => {}
        _ => {
            let route = with_edges
                .iter()
                .map(|c| step(comp[c.to_host[0]], PieceKind::Component, c, Engine::ComponentRule))
                .collect();
            return Ok(none(route));
        }
    }
    let c = &with_edges[0];
    let ci = comp[c.to_host[0]];
    let h = &c.graph;
    if h.n() == 2 {
        return Ok(found(vec![c.to_host[0]], vec![step(ci, PieceKind::Component, c, Engine::Trivial)]));
    }
    // With more than one edge, every bridge endpoint of degree at least 2
    // is in every connected cover, and no leaf is needed.
    let bridges = bridges_and_blocks(h).bridges;
    let mut forced = vec![false; h.n()];
    for &(u, v) in &bridges {
        for w in [u, v] {
            if h.degree(w) >= 2 {
                forced[w] = true;
            }
        }
    }
    let mut set = Vec::new();
    let mut route = Vec::new();
    for b in h.without_edges(&bridges).components() {
        if b.len() == 1 && h.degree(b[0]) == 1 {
            continue;
        }
        let mut j = b.clone();
        for &(u, v) in &bridges {
            if b.contains(&u) {
                j.push(v);
            } else if b.contains(&v) {
                j.push(u);
            }
        }
        let sub = h.induced_subgraph(&j);
        let required: Vec<usize> = (0..sub.graph.n()).filter(|&i| forced[sub.to_host[i]]).collect();
        let anchor = c.to_host[b[0]];
        let local = in_piece(oracle_min_cvc_with(&sub.graph, &required, limits), PieceKind::BlockWithBridges, anchor)?
            .ok_or_else(|| Error::Invariant(format!("block at vertex {anchor} has no connected cover")))?;
        set.extend(c.lift(&sub.lift(&local)));
        route.push(RouteStep {
            component: ci,
            piece: PieceKind::BlockWithBridges,
            anchor,
            vertices: sub.graph.n(),
            engine: Engine::OracleCvc,
        });
    }
    Ok(found(to_vertex_set(set), route))
}

fn solve_colouring(g: &Graph, k: usize, limits: &Limits) -> Result<Outcome> {
    let bridges = bridges_and_blocks(g).bridges;
    let comp = component_index(g);
    let pieces = blocks(g, &bridges);
    let mut colour = vec![0usize; g.n()];
    let mut piece_of = vec![0usize; g.n()];
    let mut palette = 0;
    let mut route = Vec::new();
    for (pi, b) in pieces.iter().enumerate() {
        let brooks = if b.graph.is_subcubic() { brooks_colouring(&b.graph) } else { None };
        let (local, engine) = match brooks {
            Some(c) => (c, Engine::BrooksGreedy),
            None => (
                in_piece(oracle_chromatic(&b.graph, limits), PieceKind::Block, b.to_host[0])?.1,
                Engine::OracleColouring,
            ),
        };
        for (i, &v) in b.to_host.iter().enumerate() {
            colour[v] = local[i];
            piece_of[v] = pi;
        }
        palette = palette.max(local.iter().max().map_or(0, |&c| c + 1));
        route.push(step(comp[b.to_host[0]], PieceKind::Block, b, engine));
    }
    if !bridges.is_empty() {
        palette = palette.max(2);
    }
    // Walk the tree of pieces; a piece reached over a clashing bridge has its
    // colours permuted once, before any of its own bridges are looked at.
    let mut across: Vec<Vec<(usize, usize)>> = vec![Vec::new(); pieces.len()];
    for &(u, v) in &bridges {
        across[piece_of[u]].push((u, v));
        across[piece_of[v]].push((v, u));
    }
    let mut seen = vec![false; pieces.len()];
    for start in 0..pieces.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for &(u, v) in &across[p] {
                let q = piece_of[v];
                if seen[q] {
                    continue;
                }
                seen[q] = true;
                if colour[u] == colour[v] {
                    let old = colour[v];
                    let new = (0..palette).find(|&c| c != colour[u]).expect("palette has two colours");
                    for &w in &pieces[q].to_host {
                        if colour[w] == old {
                            colour[w] = new;
                        } else if colour[w] == new {
                            colour[w] = old;
                        }
                    }
                }
                queue.push_back(q);
            }
        }
    }
    let decision = palette <= k;
    Ok(Outcome {
        decision,
        value: Some(palette),
        witness: decision.then_some(Witness::Colouring(colour)),
        route,
        violations: Vec::new(),
    })
}

fn solve_matching_cut(g: &Graph, limits: &Limits) -> Result<Outcome> {
    if !g.is_connected() {
        return Err(Error::Validation(
            "matching cut is defined for connected graphs only".into(),
        ));
    }
    let whole = g.induced_subgraph(&g.vertices().collect::<Vec<_>>());
    if g.n() < 2 {
        return Ok(Outcome {
            decision: false,
            value: None,
            witness: None,
            route: vec![step(0, PieceKind::Component, &whole, Engine::Trivial)],
            violations: Vec::new(),
        });
    }
    let d = bridges_and_blocks(g);
    let (cut, engine) = match d.proper_bridges.first().or(d.bridges.first()) {
        Some(&b) => (Some(vec![b]), Engine::BridgeRule),
        None => (oracle_matching_cut(g, limits)?, Engine::OracleMatchingCut),
    };
    Ok(Outcome {
        decision: cut.is_some(),
        value: None,
        witness: cut.map(Witness::Edges),
        route: vec![step(0, PieceKind::Component, &whole, engine)],
        violations: Vec::new(),
    })
}

fn validate(problem: ProblemKind, g: &Graph, o: &Outcome) -> Validation {
    let proper = bridges_and_blocks(g).proper_bridges;
    let (ok, detail) = match (&o.witness, problem) {
        (None, _) => (true, "no witness for a negative answer".to_string()),
        (Some(Witness::Vertices(s)), ProblemKind::Fvs) => (check_fvs(g, s), "feedback vertex set".into()),
        (Some(Witness::Vertices(s)), ProblemKind::Ifvs) => (
            check_ifvs(g, s) && o.violations.is_empty(),
            if o.violations.is_empty() {
                "independent feedback vertex set".into()
            } else {
                "a connecting bridge has both endpoints chosen".into()
            },
        ),
        (Some(Witness::Vertices(s)), ProblemKind::Cvc) => (
            check_cvc(g, s) && proper.iter().all(|(u, v)| s.contains(u) && s.contains(v)),
            "connected vertex cover containing every proper bridge".into(),
        ),
        (Some(Witness::Colouring(c)), ProblemKind::Colouring(k)) => (check_colouring(g, c, k), format!("proper {k}-colouring")),
        (Some(Witness::Edges(cut)), ProblemKind::MatchingCut) => (check_matching_cut(g, cut), "matching cut".into()),
        _ => (false, "witness does not fit the problem".into()),
    };
    Validation {
        ok,
        detail: if ok { detail } else { format!("check failed: {detail}") },
        independence_violations: o.violations.clone(),
    }
}

/// Solves `problem` on `g` by component, then by the bridge rule for the
/// problem, and re-checks the witness.
pub fn solve(problem: ProblemKind, g: &Graph, limits: &Limits) -> Result<SolveReport> {
    let outcome = match problem {
        ProblemKind::Fvs => solve_fvs(g, limits)?,
        ProblemKind::Ifvs => solve_ifvs(g, limits)?,
        ProblemKind::Cvc => solve_cvc(g, limits)?,
        ProblemKind::Colouring(k) => solve_colouring(g, k, limits)?,
        ProblemKind::MatchingCut => solve_matching_cut(g, limits)?,
    };
    let validation = validate(problem, g, &outcome);
    Ok(SolveReport {
        problem,
        k: match problem {
            ProblemKind::Colouring(k) => Some(k),
            _ => None,
        },
        vertices: g.n(),
        edges: g.m(),
        decision: outcome.decision,
        value: outcome.value,
        witness: outcome.witness,
        route: outcome.route,
        validation,
        input_digest: graph_digest(g),
    })
}
