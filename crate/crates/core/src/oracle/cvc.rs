//! Minimum connected vertex cover by subset enumeration in order of size.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Limits;

/// Bitmask searches in the oracles never go beyond this many vertices.
pub(crate) const BITMASK_CEILING: usize = 30;

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

pub(crate) fn is_connected_mask(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == set
}

/// Lexicographically least minimum connected vertex cover, or `None` when
/// edges lie in more than one component.
pub fn oracle_min_cvc(g: &Graph, limits: &Limits) -> Result<Option<VertexSet>> {
    oracle_min_cvc_with(g, &[], limits)
}

/// Like [`oracle_min_cvc`], restricted to covers containing `required`.
pub fn oracle_min_cvc_with(
    g: &Graph,
    required: &[usize],
    limits: &Limits,
) -> Result<Option<VertexSet>> {
    Error::check_capacity("CVC oracle input", g.n(), limits.oracle.min(BITMASK_CEILING))?;
    let adj = adjacency_masks(g);
    let edges: Vec<u32> = g.edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect();
    let base = required.iter().fold(0u32, |acc, &v| acc | 1 << v);
    let free: Vec<usize> = g.vertices().filter(|&v| base >> v & 1 == 0).collect();
    let covers = |set: u32| edges.iter().all(|&e| e & set != 0);
    for k in 0..=free.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let set = idx.iter().fold(base, |acc, &i| acc | 1 << free[i]);
            if covers(set) && is_connected_mask(&adj, set) {
                return Ok(Some((0..g.n()).filter(|&v| set >> v & 1 == 1).collect()));
            }
            if !next_combination(&mut idx, free.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
