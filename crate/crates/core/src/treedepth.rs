//! Exact treedepth for small graphs, a DFS-tree upper bound for larger
//! ones, and exact longest paths.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling for the bitmask-based searches in this module.
pub const MAX_BITMASK_VERTICES: usize = 63;

/// A treedepth value together with whether it is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Treedepth {
    Exact(usize),
    UpperBound(usize),
}

impl Treedepth {
    pub fn value(self) -> usize {
        match self {
            Treedepth::Exact(v) | Treedepth::UpperBound(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Treedepth::Exact(_))
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect()
}

fn component_masks(adj: &[u64], mut set: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while set != 0 {
        let start = set & set.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        set &= !comp;
        out.push(comp);
    }
    out
}

struct Exact<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, usize>,
}

impl Exact<'_> {
    /// Treedepth of the connected vertex set `set`.
    fn connected(&mut self, set: u64) -> usize {
        let size = set.count_ones() as usize;
        if size <= 2 {
            return size;
        }
        if let Some(&d) = self.memo.get(&set) {
            return d;
        }
        let is_clique = {
            let mut rest = set;
            let mut all = true;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.adj[v] & set) != set & !(1 << v) {
                    all = false;
                    break;
                }
            }
            all
        };
        if is_clique {
            self.memo.insert(set, size);
            return size;
        }
        let mut best = size;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut worst = 0;
            for comp in component_masks(self.adj, set & !(1 << v)) {
                if comp.count_ones() as usize <= worst {
                    continue;
                }
                worst = worst.max(self.connected(comp));
                if worst + 1 >= best {
                    break;
                }
            }
            best = best.min(worst + 1);
        }
        self.memo.insert(set, best);
        best
    }
}

/// Exact treedepth by memoised recursion over connected vertex subsets.
/// `td(K1) = 1`; the empty graph has treedepth 0.
pub fn treedepth_exact(g: &Graph, cap: usize) -> Result<usize> {
    Error::check_capacity("treedepth input", g.n(), cap.min(MAX_BITMASK_VERTICES))?;
    let adj = masks(g);
    let mut exact = Exact {
        adj: &adj,
        memo: HashMap::new(),
    };
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    Ok(component_masks(&adj, all)
        .into_iter()
        .map(|c| exact.connected(c))
        .max()
        .unwrap_or(0))
}

/// Height of the best DFS forest over all choices of root. Every DFS forest
/// is an elimination forest, so this bounds the treedepth from above.
pub fn treedepth_upper_bound(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| comp.iter().map(|&r| dfs_height(g, r)).min().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

fn dfs_height(g: &Graph, root: usize) -> usize {
    let mut depth = vec![0usize; g.n()];
    let mut next = vec![0usize; g.n()];
    depth[root] = 1;
    let mut stack = vec![root];
    let mut height = 1;
    while let Some(&v) = stack.last() {
        if let Some(&w) = g.neighbors(v).get(next[v]) {
            next[v] += 1;
            if depth[w] == 0 {
                depth[w] = depth[v] + 1;
                height = height.max(depth[w]);
                stack.push(w);
            }
        } else {
            stack.pop();
        }
    }
    height
}

/// Exact treedepth when `g` fits under `cap`, the DFS bound otherwise.
pub fn treedepth(g: &Graph, cap: usize) -> Treedepth {
    match treedepth_exact(g, cap) {
        Ok(d) => Treedepth::Exact(d),
        Err(_) => Treedepth::UpperBound(treedepth_upper_bound(g)),
    }
}

/// Number of edges on a longest path.
pub fn longest_path_length(g: &Graph, cap: usize) -> Result<usize> {
    Error::check_capacity("longest path input", g.n(), cap.min(MAX_BITMASK_VERTICES))?;
    let adj = masks(g);
    let mut best = 0;
    for comp in component_masks(&adj, if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) }) {
        let limit = comp.count_ones() as usize - 1;
        let mut rest = comp;
        while rest != 0 && best < limit {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            extend(&adj, v, 1 << v, 0, limit, &mut best);
        }
    }
    Ok(best)
}

fn extend(adj: &[u64], v: usize, used: u64, len: usize, limit: usize, best: &mut usize) {
    *best = (*best).max(len);
    if *best == limit {
        return;
    }
    let mut next = adj[v] & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        extend(adj, w, used | 1 << w, len + 1, limit, best);
        if *best == limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, star};

    #[test]
    fn small_values() {
        assert_eq!(treedepth_exact(&Graph::new(0), 20).unwrap(), 0);
        assert_eq!(treedepth_exact(&Graph::new(1), 20).unwrap(), 1);
        assert_eq!(treedepth_exact(&Graph::new(3), 20).unwrap(), 1);
        assert_eq!(treedepth_exact(&complete(4).unwrap(), 20).unwrap(), 4);
        assert_eq!(treedepth_exact(&star(6).unwrap(), 20).unwrap(), 2);
        assert_eq!(treedepth_exact(&cycle(5).unwrap(), 20).unwrap(), 4);
    }

    /// Brute force over elimination orders: eliminate a vertex, recurse on
    /// the components. Exponential but independent of the memoised search.
    fn naive(g: &Graph) -> usize {
        if g.n() == 0 {
            return 0;
        }
        let comps = g.connected_components();
        if comps.len() > 1 {
            return comps.iter().map(|c| naive(&c.graph)).max().unwrap();
        }
        1 + g
            .vertices()
            .map(|v| naive(&g.without_vertices(&[v]).graph))
            .min()
            .unwrap()
    }

    #[test]
    fn paths_match_log_formula_and_naive_recursion() {
        for n in 1..=9 {
            let p = path(n).unwrap();
            let expected = (usize::BITS - n.leading_zeros()) as usize;
            assert_eq!(treedepth_exact(&p, 20).unwrap(), expected, "P{n}");
            assert_eq!(naive(&p), expected);
        }
        assert_eq!(treedepth_exact(&path(7).unwrap(), 20).unwrap(), 3);
    }

    #[test]
    fn capacity_and_fallback() {
        let p = path(25).unwrap();
        assert!(matches!(treedepth_exact(&p, 20), Err(Error::Capacity { .. })));
        let td = treedepth(&p, 20);
        assert!(!td.is_exact());
        assert!(td.value() >= 5);
        assert!(treedepth_upper_bound(&path(7).unwrap()) >= 3);
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_path_length(&cycle(5).unwrap(), 20).unwrap(), 4);
        assert_eq!(longest_path_length(&complete(4).unwrap(), 20).unwrap(), 3);
        assert_eq!(longest_path_length(&star(4).unwrap(), 20).unwrap(), 2);
        assert_eq!(longest_path_length(&Graph::new(3), 20).unwrap(), 0);
        assert_eq!(longest_path_length(&Graph::new(0), 20).unwrap(), 0);
    }
}
