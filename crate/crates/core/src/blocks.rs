//! Bridges, cut vertices and biconnected blocks from a single low-link DFS.

use serde::Serialize;

use crate::graph::{normalize_edge, to_vertex_set, Edge, Graph, VertexSet};

/// A maximal biconnected subgraph: a 2-connected piece, a bridge, or an
/// isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<Edge>,
}

impl Block {
    /// A block whose edges form exactly one cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub bridges: Vec<Edge>,
    /// Bridges with neither endpoint of degree 1.
    pub proper_bridges: Vec<Edge>,
    pub cut_vertices: VertexSet,
    /// Incidences `(block index, cut vertex)` of the block-cut tree.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn is_quasi_bridgeless(&self) -> bool {
        self.proper_bridges.is_empty()
    }
}

const UNSEEN: usize = usize::MAX;

struct Frame {
    v: usize,
    parent: usize,
    next: usize,
}

pub fn bridges_and_blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(Block {
                vertices: vec![root],
                edges: Vec::new(),
            });
            continue;
        }
        let mut root_children = 0;
        let mut stack = vec![Frame {
            v: root,
            parent: UNSEEN,
            next: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next];
                frame.next += 1;
                if w == frame.parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            let parent = frame.parent;
            stack.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] > disc[parent] {
                bridges.push(normalize_edge(parent, v));
            }
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(normalize_edge(e.0, e.1));
                    if e == (parent, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let vertices = to_vertex_set(edges.iter().flat_map(|&(a, b)| [a, b]));
                blocks.push(Block { vertices, edges });
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.edges.cmp(&b.edges)));
    bridges.sort_unstable();
    let proper_bridges = bridges
        .iter()
        .copied()
        .filter(|&(u, v)| g.degree(u) > 1 && g.degree(v) > 1)
        .collect();
    let cut_vertices: VertexSet = (0..n).filter(|&v| is_cut[v]).collect();
    let mut block_cut_tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if is_cut[v] {
                block_cut_tree.push((i, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        bridges,
        proper_bridges,
        cut_vertices,
        block_cut_tree,
    }
}

/// Vertex sets of the components left after deleting every bridge.
pub fn two_edge_connected_components(g: &Graph) -> Vec<VertexSet> {
    let bridges = bridges_and_blocks(g).bridges;
    g.without_edges(&bridges).components()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles_joined_by_edge() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn path_has_only_improper_bridges() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = bridges_and_blocks(&p3);
        assert_eq!(d.bridges, vec![(0, 1), (1, 2)]);
        assert!(d.proper_bridges.is_empty());
        assert_eq!(d.cut_vertices, vec![1]);
        assert_eq!(d.blocks.len(), 2);
    }

    #[test]
    fn joined_triangles() {
        let d = bridges_and_blocks(&triangles_joined_by_edge());
        assert_eq!(d.bridges, vec![(2, 3)]);
        assert_eq!(d.proper_bridges, vec![(2, 3)]);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![2, 3]);
        assert_eq!(d.block_cut_tree.len(), 4);
        assert_eq!(
            two_edge_connected_components(&triangles_joined_by_edge()),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
    }

    #[test]
    fn cycle_is_one_block() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let d = bridges_and_blocks(&c5);
        assert!(d.bridges.is_empty());
        assert_eq!(d.blocks.len(), 1);
        assert!(d.blocks[0].is_cycle());
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        let d = bridges_and_blocks(&g);
        let mut all: Vec<Edge> = d.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
        assert_eq!(d.cut_vertices, vec![2, 3, 5]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let d = bridges_and_blocks(&Graph::new(2));
        assert_eq!(d.blocks.len(), 2);
        assert!(d.bridges.is_empty());
    }
}
