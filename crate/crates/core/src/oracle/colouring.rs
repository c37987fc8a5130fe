//! Chromatic number by backtracking over increasing colour counts.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Limits;

struct Backtrack<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    colours: Vec<usize>,
    k: usize,
}

impl Backtrack<'_> {
    fn assign(&mut self, i: usize, used: usize) -> bool {
        let Some(&v) = self.order.get(i) else {
            return true;
        };
        // A fresh colour is interchangeable with any other unused one.
        for c in 0..self.k.min(used + 1) {
            if self.g.neighbors(v).iter().any(|&w| self.colours[w] == c) {
                continue;
            }
            self.colours[v] = c;
            if self.assign(i + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colours[v] = usize::MAX;
        false
    }
}

/// Vertices in BFS order from each component's highest-degree vertex, so
/// each vertex after the first meets an already coloured neighbour.
fn colouring_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let start = *comp
            .iter()
            .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("components are nonempty");
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        let first = order.len();
        order.push(start);
        let mut i = first;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// A proper colouring with colours `0..k`, if one exists.
pub fn oracle_k_colouring(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    Error::check_capacity("colouring oracle input", g.n(), limits.oracle)?;
    let mut bt = Backtrack {
        g,
        order: colouring_order(g),
        colours: vec![usize::MAX; g.n()],
        k,
    };
    Ok(bt.assign(0, 0).then_some(bt.colours))
}

/// The chromatic number with an optimal colouring.
pub fn oracle_chromatic(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    Error::check_capacity("colouring oracle input", g.n(), limits.oracle)?;
    for k in 0..=g.n() {
        if let Some(c) = oracle_k_colouring(g, k, limits)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colours always suffice")
}
