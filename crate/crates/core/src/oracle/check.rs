//! Witness validators, written directly against the definitions so they
//! share no code with the solvers they check.

use crate::graph::{Edge, Graph};

fn membership(g: &Graph, set: &[usize]) -> Option<Vec<bool>> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        if v >= g.n() || std::mem::replace(&mut inside[v], true) {
            return None;
        }
    }
    Some(inside)
}

/// Whether the graph minus `removed` contains a cycle, by DFS looking for a
/// non-tree edge.
fn has_cycle_avoiding(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = removed.to_vec();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if removed[w] || w == parent[v] {
                    continue;
                }
                if seen[w] {
                    return true;
                }
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    false
}

pub fn check_fvs(g: &Graph, set: &[usize]) -> bool {
    membership(g, set).is_some_and(|inside| !has_cycle_avoiding(g, &inside))
}

pub fn check_ifvs(g: &Graph, set: &[usize]) -> bool {
    check_fvs(g, set)
        && set
            .iter()
            .all(|&u| g.neighbors(u).iter().all(|w| !set.contains(w)))
}

pub fn check_cvc(g: &Graph, set: &[usize]) -> bool {
    let Some(inside) = membership(g, set) else {
        return false;
    };
    if g.edges().iter().any(|&(u, v)| !inside[u] && !inside[v]) {
        return false;
    }
    let Some(&start) = set.first() else {
        return true;
    };
    let mut reached = vec![false; g.n()];
    reached[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if inside[w] && !reached[w] {
                reached[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == set.len()
}

/// Whether `colours` is a proper colouring using colours `0..k`.
pub fn check_colouring(g: &Graph, colours: &[usize], k: usize) -> bool {
    colours.len() == g.n()
        && colours.iter().all(|&c| c < k)
        && g.edges().iter().all(|&(u, v)| colours[u] != colours[v])
}

/// Whether `cut` is a nonempty matching whose removal disconnects `g`.
pub fn check_matching_cut(g: &Graph, cut: &[Edge]) -> bool {
    if cut.is_empty() || cut.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let mut touched = vec![false; g.n()];
    for &(u, v) in cut {
        if std::mem::replace(&mut touched[u], true) || std::mem::replace(&mut touched[v], true) {
            return false;
        }
    }
    let (u, v) = cut[0];
    let is_cut = |a: usize, b: usize| cut.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
    let mut reached = vec![false; g.n()];
    reached[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if !reached[w] && !is_cut(x, w) {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    !reached[v]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};

    #[test]
    fn validators() {
        let k4 = complete(4).unwrap();
        assert!(check_fvs(&k4, &[0, 1]));
        assert!(!check_fvs(&k4, &[0]));
        assert!(!check_fvs(&k4, &[0, 0]));
        assert!(!check_ifvs(&k4, &[0, 1]));
        let c4 = cycle(4).unwrap();
        assert!(check_ifvs(&c4, &[2]));
        assert!(check_cvc(&c4, &[0, 1, 2]));
        assert!(!check_cvc(&c4, &[0, 2]));
        assert!(check_cvc(&Graph::new(3), &[]));
        assert!(check_colouring(&c4, &[0, 1, 0, 1], 2));
        assert!(!check_colouring(&c4, &[0, 1, 0, 1], 1));
        assert!(check_matching_cut(&c4, &[(0, 1), (2, 3)]));
        assert!(!check_matching_cut(&c4, &[(0, 1)]));
        assert!(!check_matching_cut(&path(3).unwrap(), &[(0, 1), (1, 2)]));
        assert!(check_matching_cut(&path(3).unwrap(), &[(1, 2)]));
    }
}
