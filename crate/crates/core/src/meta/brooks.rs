//! Optimal colourings of connected subcubic graphs without search.
//!
//! Bipartite graphs, complete graphs and odd cycles are coloured directly.
//! Anything else needs exactly three colours, which greedy colouring finds
//! in a suitable order: reverse BFS order from a vertex of degree below 3,
//! or, in a cubic graph, from a vertex `v` after giving the same colour to
//! two nonadjacent neighbours `a`, `b` of `v` whose removal keeps the graph
//! connected.

use std::collections::VecDeque;

use crate::graph::Graph;

fn two_colouring(g: &Graph) -> Option<Vec<usize>> {
    let mut colour = vec![usize::MAX; g.n()];
    for s in g.vertices() {
        if colour[s] != usize::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if colour[w] == usize::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

/// BFS order from `root`, skipping vertices in `skip`.
fn bfs_order(g: &Graph, root: usize, skip: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    for &s in skip {
        seen[s] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

fn greedy(g: &Graph, colour: &mut [usize], order: impl Iterator<Item = usize>) {
    for v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).expect("some colour is free");
    }
}

/// An optimal colouring of a connected subcubic graph, colours numbered from
/// 0. Returns `None` only if the cubic case finds no usable neighbour pair,
/// which cannot happen for 2-connected inputs.
pub fn brooks_colouring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    debug_assert!(g.is_subcubic() && g.is_connected());
    if let Some(c) = two_colouring(g) {
        return Some(c);
    }
    if g.is_complete() {
        return Some((0..n).collect());
    }
    let mut colour = vec![usize::MAX; n];
    if g.vertices().all(|v| g.degree(v) == 2) {
        // Odd cycle: walk it, alternating, and close with a third colour.
        let mut prev = usize::MAX;
        let mut v = 0;
        for i in 0..n {
            colour[v] = if i == n - 1 { 2 } else { i % 2 };
            let next = *g.neighbors(v).iter().find(|&&w| w != prev).expect("cycle");
            prev = v;
            v = next;
        }
        return Some(colour);
    }
    if let Some(root) = g.vertices().find(|&v| g.degree(v) < 3) {
        greedy(g, &mut colour, bfs_order(g, root, &[]).into_iter().rev());
        return Some(colour);
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i], nb[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                let order = bfs_order(g, v, &[a, b]);
                if order.len() != n - 2 {
                    continue;
                }
                colour[a] = 0;
                colour[b] = 0;
                greedy(g, &mut colour, order.into_iter().rev());
                return Some(colour);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_subcubic_graphs;
    use crate::generate::{petersen, random_subcubic};
    use crate::oracle::check::check_colouring;
    use crate::oracle::oracle_chromatic;
    use crate::Limits;

    #[test]
    fn optimal_on_small_subcubic_graphs() {
        let lim = Limits::default();
        for g in connected_subcubic_graphs(9).unwrap() {
            let c = brooks_colouring(&g).expect("connected subcubic graphs colour");
            let k = c.iter().max().map_or(0, |&m| m + 1);
            assert!(check_colouring(&g, &c, k));
            assert_eq!(k, oracle_chromatic(&g, &lim).unwrap().0, "{g:?}");
        }
    }

    #[test]
    fn cubic_graphs_take_three() {
        let c = brooks_colouring(&petersen()).unwrap();
        assert!(check_colouring(&petersen(), &c, 3));
        for seed in 0..50 {
            let g = random_subcubic(seed, 30, 15).unwrap();
            let c = brooks_colouring(&g).unwrap();
            assert!(check_colouring(&g, &c, 3));
        }
    }
}
