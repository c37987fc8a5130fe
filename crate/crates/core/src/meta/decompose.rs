//! Splitting a connected graph at its bridges into subcubic parts and
//! bounded-treedepth parts.
//!
//! A block here is a component left after deleting every bridge. A block is
//! T-type if some vertex has degree above 3 in the host, or if it is a single
//! vertex or a cycle (subcubic but trivially of small treedepth, and this
//! keeps very nice cacti out of the subcubic parts). Other blocks are C-type.
//! Blocks of the same type joined by a bridge are merged, so every remaining
//! bridge between parts joins a C-type part to a T-type part.

use serde::Serialize;

use crate::blocks::bridges_and_blocks;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Subgraph, VertexSet};
use crate::treedepth::{treedepth, Treedepth};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    CType,
    TType,
}

#[derive(Clone, Debug, Serialize)]
pub struct Part {
    pub kind: PartKind,
    /// Host vertex ids, sorted.
    pub vertices: VertexSet,
    /// Host bridges with both endpoints in this part.
    pub internal_bridges: Vec<Edge>,
    /// Computed for T-type parts: exact under the treedepth cap, a DFS bound
    /// above it.
    pub treedepth: Option<Treedepth>,
    #[serde(skip)]
    pub subgraph: Subgraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectingBridge {
    pub edge: Edge,
    pub c_part: usize,
    pub t_part: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionedInstance {
    pub parts: Vec<Part>,
    pub connecting_bridges: Vec<ConnectingBridge>,
}

impl PartitionedInstance {
    /// Part index of every host vertex.
    pub fn part_of(&self, host_n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; host_n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in &p.vertices {
                of[v] = i;
            }
        }
        of
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

pub fn decompose_ct(g: &Graph, limits: &Limits) -> Result<PartitionedInstance> {
    if !g.is_connected() {
        return Err(Error::Validation(
            "decomposition needs a connected graph".into(),
        ));
    }
    let bridges = bridges_and_blocks(g).bridges;
    let make_part = |kind: PartKind, vertices: VertexSet| {
        let subgraph = g.induced_subgraph(&vertices);
        let inside = |v: usize| vertices.binary_search(&v).is_ok();
        let internal_bridges = bridges
            .iter()
            .copied()
            .filter(|&(u, v)| inside(u) && inside(v))
            .collect();
        let treedepth = (kind == PartKind::TType).then(|| treedepth(&subgraph.graph, limits.treedepth));
        Part {
            kind,
            vertices,
            internal_bridges,
            treedepth,
            subgraph,
        }
    };
    if g.is_subcubic() {
        return Ok(PartitionedInstance {
            parts: vec![make_part(PartKind::CType, g.vertices().collect())],
            connecting_bridges: Vec::new(),
        });
    }
    let blocks = g.without_edges(&bridges).components();
    let mut block_of = vec![0; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let kinds: Vec<PartKind> = blocks
        .iter()
        .map(|b| {
            let internal_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| block_of[w] == block_of[v]).count();
            let is_cycle = b.len() >= 3 && b.iter().all(|&v| internal_degree(v) == 2);
            if b.iter().any(|&v| g.degree(v) > 3) || b.len() == 1 || is_cycle {
                PartKind::TType
            } else {
                PartKind::CType
            }
        })
        .collect();
    let mut parent: Vec<usize> = (0..blocks.len()).collect();
    for &(u, v) in &bridges {
        let (a, b) = (block_of[u], block_of[v]);
        if kinds[a] == kinds[b] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    // Parts are numbered by their smallest vertex.
    let mut part_of_root = vec![usize::MAX; blocks.len()];
    let mut members: Vec<(PartKind, VertexSet)> = Vec::new();
    for v in g.vertices() {
        let root = find(&mut parent, block_of[v]);
        if part_of_root[root] == usize::MAX {
            part_of_root[root] = members.len();
            members.push((kinds[root], Vec::new()));
        }
        members[part_of_root[root]].1.push(v);
    }
    let part_of = |v: usize, parent: &mut [usize]| part_of_root[find(parent, block_of[v])];
    let mut connecting_bridges = Vec::new();
    for &(u, v) in &bridges {
        let (pu, pv) = (part_of(u, &mut parent), part_of(v, &mut parent));
        if pu != pv {
            let (c_part, t_part) = if members[pu].0 == PartKind::CType { (pu, pv) } else { (pv, pu) };
            connecting_bridges.push(ConnectingBridge {
                edge: (u, v),
                c_part,
                t_part,
            });
        }
    }
    Ok(PartitionedInstance {
        parts: members
            .into_iter()
            .map(|(kind, vertices)| make_part(kind, vertices))
            .collect(),
        connecting_bridges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, petersen, random_block_bridge};

    fn join(a: &Graph, b: &Graph, u: usize, v: usize) -> Graph {
        let g = a.disjoint_union(b);
        g.with_edges(&[(u, a.n() + v)]).unwrap()
    }

    #[test]
    fn subcubic_graph_is_one_c_part() {
        let d = decompose_ct(&petersen(), &Limits::default()).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].kind, PartKind::CType);
        assert!(d.connecting_bridges.is_empty());
    }

    #[test]
    fn two_cliques_merge() {
        let k5 = complete(5).unwrap();
        let d = decompose_ct(&join(&k5, &k5, 0, 0), &Limits::default()).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].kind, PartKind::TType);
        assert_eq!(d.parts[0].internal_bridges, vec![(0, 5)]);
        assert_eq!(d.parts[0].treedepth, Some(Treedepth::Exact(6)));
    }

    #[test]
    fn clique_and_subcubic_part() {
        // Subdivide one Petersen edge so the new vertex has room for the
        // bridge.
        let mut p = petersen();
        let (a, b) = p.edges()[0];
        p = p.without_edges(&[(a, b)]);
        let mut edges = p.edges();
        edges.extend([(a, 10), (10, b)]);
        let p = Graph::from_edges(11, edges).unwrap();
        let g = join(&complete(5).unwrap(), &p, 0, 10);
        let d = decompose_ct(&g, &Limits::default()).unwrap();
        let kinds: Vec<PartKind> = d.parts.iter().map(|p| p.kind).collect();
        assert_eq!(kinds, vec![PartKind::TType, PartKind::CType]);
        assert_eq!(
            d.connecting_bridges,
            vec![ConnectingBridge {
                edge: (0, 15),
                c_part: 1,
                t_part: 0
            }]
        );
    }

    #[test]
    fn parts_cover_vertices_and_bridges_alternate() {
        for seed in 0..200 {
            let g = random_block_bridge(seed, 16).unwrap();
            let d = decompose_ct(&g, &Limits::default()).unwrap();
            let of = d.part_of(g.n());
            assert!(of.iter().all(|&p| p < d.parts.len()));
            for b in &d.connecting_bridges {
                assert_eq!(d.parts[b.c_part].kind, PartKind::CType);
                assert_eq!(d.parts[b.t_part].kind, PartKind::TType);
            }
            for p in &d.parts {
                assert!(p.subgraph.graph.is_connected());
                if p.kind == PartKind::CType {
                    assert!(p.vertices.iter().all(|&v| g.degree(v) <= 3));
                }
            }
            // Every edge between different parts is a connecting bridge.
            for (u, v) in g.edges() {
                if of[u] != of[v] {
                    assert!(d.connecting_bridges.iter().any(|b| b.edge == (u, v)));
                }
            }
        }
    }
}
