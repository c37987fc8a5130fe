//! The variable gadget of the reduction and the checklist it must pass.
//!
//! The gadget has twelve vertices. Triangles `x x' a` and `y y' b` carry the
//! two positive occurrences, a diamond on `z s t c` carries the negative one,
//! and `p`, `q` hang off `a`, `b`, `c`. The edge set is frozen in
//! `data/variable_gadget.txt`; the checklist below records every property the
//! correctness argument relies on, and is verified when the gadget is first
//! loaded.

use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

pub const X: usize = 0;
pub const X_PRIME: usize = 1;
pub const A: usize = 2;
pub const Y: usize = 3;
pub const Y_PRIME: usize = 4;
pub const B: usize = 5;
pub const Z: usize = 6;
pub const S: usize = 7;
pub const T: usize = 8;
pub const C: usize = 9;
pub const P: usize = 10;
pub const Q: usize = 11;

pub const GADGET_SIZE: usize = 12;
pub const LABELS: [&str; GADGET_SIZE] = ["x", "x'", "a", "y", "y'", "b", "z", "s", "t", "c", "p", "q"];

/// Gadget members in the solution for a true variable.
pub const TRUE_SET: [usize; 4] = [X, Y, P, T];
/// Gadget members in the solution for a false variable.
pub const FALSE_SET: [usize; 4] = [Z, A, B, C];

const DATA: &str = include_str!("../../data/variable_gadget.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChecklistItem {
    /// Four vertex-disjoint cycles, so every FVS takes at least four vertices.
    DisjointCycles,
    /// Triangles `x x' a`, `y y' b` and a diamond or 4-cycle on `z s t c`.
    TrianglesAndDiamond,
    /// `{x,y,p,t}` and `{z,a,b,c}` are independent feedback vertex sets.
    IndependentCovers,
    /// No 4-vertex FVS contains `{x,z}` or `{y,z}`.
    NoMixedCover,
    /// Cycles and literal-to-literal paths through `x` pass `a`; through `y`
    /// pass `b`.
    LiteralPaths,
    /// Every degree-4 vertex has a 3-vertex cut within distance 2.
    SmallCuts,
    /// Maximum degree 4 once `x`, `y`, `z` each gain two clause edges.
    DegreeBudget,
}

pub const CHECKLIST: [ChecklistItem; 7] = [
    ChecklistItem::DisjointCycles,
    ChecklistItem::TrianglesAndDiamond,
    ChecklistItem::IndependentCovers,
    ChecklistItem::NoMixedCover,
    ChecklistItem::LiteralPaths,
    ChecklistItem::SmallCuts,
    ChecklistItem::DegreeBudget,
];

#[derive(Clone, Debug)]
pub struct VariableGadget {
    pub graph: Graph,
}

static GADGET: OnceLock<VariableGadget> = OnceLock::new();

/// The frozen gadget. Panics on first use if it fails the checklist, since
/// every reduction built from it would then be unsound.
pub fn build_variable_gadget() -> &'static VariableGadget {
    GADGET.get_or_init(|| {
        let graph = Graph::parse(DATA).expect("gadget data parses");
        let failed: Vec<ChecklistItem> = gadget_checklist(&graph)
            .into_iter()
            .filter(|&(_, ok)| !ok)
            .map(|(item, _)| item)
            .collect();
        assert!(failed.is_empty(), "variable gadget fails {failed:?}");
        VariableGadget { graph }
    })
}

fn mask_has_cycle(g: &Graph, mask: u32) -> bool {
    let inside = |v: usize| mask >> v & 1 == 1;
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            v = p[v];
        }
        v
    }
    for (u, v) in g.edges() {
        if inside(u) && inside(v) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return true;
            }
            parent[a] = b;
        }
    }
    false
}

fn has_disjoint_cycles(g: &Graph, count: usize) -> bool {
    let n = g.n();
    let full = (1u32 << n) - 1;
    let minimal: Vec<u32> = (1..=full)
        .filter(|&m| mask_has_cycle(g, m))
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || !mask_has_cycle(g, m & !(1 << v))))
        .collect();
    fn pack(cycles: &[u32], used: u32, left: usize) -> bool {
        left == 0
            || cycles.iter().enumerate().any(|(i, &c)| {
                c & used == 0 && pack(&cycles[i + 1..], used | c, left - 1)
            })
    }
    pack(&minimal, 0, count)
}

/// Vertices reachable from `v` avoiding `removed`.
fn reach(g: &Graph, v: usize, removed: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    seen[v] = true;
    let mut stack = vec![v];
    let mut out = vec![false; g.n()];
    out[v] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out[w] = true;
                stack.push(w);
            }
        }
    }
    out
}

fn on_cycle_avoiding(g: &Graph, v: usize, removed: usize) -> bool {
    g.neighbors(v).iter().any(|&w| {
        w != removed && {
            let h = g.without_edges(&[crate::graph::normalize_edge(v, w)]);
            reach(&h, v, &[removed])[w]
        }
    })
}

fn within_two(g: &Graph, v: usize, u: usize) -> bool {
    u == v || g.has_edge(u, v) || g.neighbors(v).iter().any(|&w| g.has_edge(w, u))
}

/// Evaluates every checklist item on a 12-vertex graph numbered as in
/// [`LABELS`].
pub fn gadget_checklist(g: &Graph) -> Vec<(ChecklistItem, bool)> {
    assert_eq!(g.n(), GADGET_SIZE, "gadget candidates have twelve vertices");
    let literals = [X, Y, Z];
    let is_fvs = |set: &[usize]| g.is_feedback_vertex_set(set);
    CHECKLIST
        .iter()
        .map(|&item| {
            let ok = match item {
                ChecklistItem::DisjointCycles => has_disjoint_cycles(g, 4),
                ChecklistItem::TrianglesAndDiamond => {
                    let triangle = |a: usize, b: usize, c: usize| {
                        g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
                    };
                    let quad = [Z, S, T, C];
                    let inner = |v: usize| quad.iter().filter(|&&w| g.has_edge(v, w)).count();
                    let inner_edges: usize = quad.iter().map(|&v| inner(v)).sum::<usize>() / 2;
                    triangle(X, X_PRIME, A)
                        && triangle(Y, Y_PRIME, B)
                        && (4..=5).contains(&inner_edges)
                        && quad.iter().all(|&v| inner(v) >= 2)
                }
                ChecklistItem::IndependentCovers => [TRUE_SET, FALSE_SET]
                    .iter()
                    .all(|s| is_fvs(s) && g.is_independent_set(s)),
                ChecklistItem::NoMixedCover => {
                    let mut ok = true;
                    for mask in 0u32..1 << GADGET_SIZE {
                        if mask.count_ones() != 4 || mask >> Z & 1 == 0 {
                            continue;
                        }
                        if mask >> X & 1 == 0 && mask >> Y & 1 == 0 {
                            continue;
                        }
                        let set: VertexSet = (0..GADGET_SIZE).filter(|&v| mask >> v & 1 == 1).collect();
                        if is_fvs(&set) {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                ChecklistItem::LiteralPaths => [(X, A), (Y, B)].iter().all(|&(l, gate)| {
                    let r = reach(g, l, &[gate]);
                    !on_cycle_avoiding(g, l, gate) && literals.iter().all(|&o| o == l || !r[o])
                }),
                ChecklistItem::SmallCuts => {
                    // Clause neighbours of a literal vertex lie outside the
                    // gadget, so its cut is its gate plus those two.
                    let cuts: [(usize, Vec<usize>); 8] = [
                        (P, vec![A, B, C]),
                        (Q, vec![A, B, C]),
                        (A, vec![X, P, Q]),
                        (B, vec![Y, P, Q]),
                        (C, vec![Z, P, Q]),
                        (X, vec![A]),
                        (Y, vec![B]),
                        (Z, vec![C]),
                    ];
                    let covered = g
                        .vertices()
                        .filter(|&v| g.degree(v) + if literals.contains(&v) { 2 } else { 0 } >= 4)
                        .all(|v| cuts.iter().any(|(c, _)| *c == v));
                    covered
                        && cuts.iter().all(|(v, cut)| {
                            let r = reach(g, *v, cut);
                            cut.iter().all(|&u| within_two(g, *v, u))
                                && literals.iter().all(|&o| o == *v || cut.contains(&o) || !r[o])
                        })
                }
                ChecklistItem::DegreeBudget => g.vertices().all(|v| {
                    g.degree(v) + if literals.contains(&v) { 2 } else { 0 } <= 4
                }),
            };
            (item, ok)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_min_fvs, oracle_min_ifvs};
    use crate::Limits;

    /// Candidate edge sets consistent with the gadget's description: fixed
    /// triangles, a 4-cycle or diamond on `z s t c` with `z` of degree 2, and
    /// `p`, `q` attached to `a`, `b`, `c` and possibly each other.
    fn candidates() -> impl Iterator<Item = Graph> {
        let quad_pairs = [(Z, S), (Z, T), (Z, C), (S, T), (S, C), (T, C)];
        (0u32..64).flat_map(move |dm| {
            (0u32..8).flat_map(move |pm| {
                (0u32..8).flat_map(move |qm| {
                    [false, true].into_iter().filter_map(move |pq| {
                        if !(4..=5).contains(&dm.count_ones()) {
                            return None;
                        }
                        let mut edges = vec![(X, X_PRIME), (X_PRIME, A), (X, A), (Y, Y_PRIME), (Y_PRIME, B), (Y, B)];
                        edges.extend((0..6).filter(|i| dm >> i & 1 == 1).map(|i| quad_pairs[i]));
                        let gates = [A, B, C];
                        edges.extend((0..3).filter(|i| pm >> i & 1 == 1).map(|i| (P, gates[i])));
                        edges.extend((0..3).filter(|i| qm >> i & 1 == 1).map(|i| (Q, gates[i])));
                        if pq {
                            edges.push((P, Q));
                        }
                        Graph::from_edges(GADGET_SIZE, edges).ok()
                    })
                })
            })
        })
    }

    #[test]
    fn frozen_gadget_is_first_passing_candidate() {
        let first = candidates()
            .find(|g| gadget_checklist(g).iter().all(|&(_, ok)| ok))
            .expect("some candidate passes");
        assert_eq!(first.edges(), build_variable_gadget().graph.edges());
    }

    #[test]
    fn labels_match_roles() {
        let g = &build_variable_gadget().graph;
        for (v, l) in LABELS.iter().enumerate() {
            assert_eq!(g.label(v), Some(*l));
        }
    }

    #[test]
    fn minimum_covers_have_size_four() {
        let g = &build_variable_gadget().graph;
        let lim = Limits::default();
        assert_eq!(oracle_min_fvs(g, &lim).unwrap().len(), 4);
        assert_eq!(oracle_min_ifvs(g, &lim).unwrap().unwrap().len(), 4);
        assert!(g.is_feedback_vertex_set(&TRUE_SET));
        assert!(g.is_independent_set(&TRUE_SET));
    }

    #[test]
    fn dropping_an_edge_breaks_the_checklist() {
        let g = &build_variable_gadget().graph;
        for e in g.edges() {
            let h = g.without_edges(&[e]);
            assert!(
                gadget_checklist(&h).iter().any(|&(_, ok)| !ok),
                "edge {e:?} is not needed"
            );
        }
    }
}
