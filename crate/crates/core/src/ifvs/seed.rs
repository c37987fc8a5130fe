//! Exact minimum feedback vertex set by reduction and branching on a
//! multigraph.
//!
//! Reductions: drop vertices of degree at most 1, take deletable vertices
//! with a loop, cap edge multiplicities at 2, bypass degree-2 vertices, and
//! contract edges between vertices that branching has fixed outside the
//! solution. Branching takes a deletable vertex of maximum degree, first into
//! the solution and then fixed out of it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Limits;

#[derive(Clone, Debug)]
struct Multigraph {
    /// Neighbour to multiplicity; a loop at `v` is stored as `adj[v][v]`.
    adj: Vec<BTreeMap<usize, usize>>,
    alive: Vec<bool>,
    fixed: Vec<bool>,
}

struct Infeasible;

impl Multigraph {
    fn from_graph(g: &Graph) -> Self {
        Multigraph {
            adj: g
                .vertices()
                .map(|v| g.neighbors(v).iter().map(|&w| (w, 1)).collect())
                .collect(),
            alive: vec![true; g.n()],
            fixed: vec![false; g.n()],
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v]
            .iter()
            .map(|(&w, &k)| if w == v { 2 * k } else { k })
            .sum()
    }

    fn remove(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.adj[v].keys().copied().collect();
        for w in nbrs {
            if w != v {
                self.adj[w].remove(&v);
            }
        }
        self.adj[v].clear();
        self.alive[v] = false;
    }

    fn add_edge(&mut self, u: usize, v: usize, k: usize) {
        let cap = |m: &mut usize| *m = (*m + k).min(2);
        cap(self.adj[u].entry(v).or_insert(0));
        if u != v {
            cap(self.adj[v].entry(u).or_insert(0));
        }
    }

    /// Merges fixed vertex `u` into fixed vertex `v` along their edge.
    fn contract(&mut self, u: usize, v: usize) {
        let nbrs: Vec<(usize, usize)> = self.adj[u].iter().map(|(&w, &k)| (w, k)).collect();
        self.remove(u);
        for (w, k) in nbrs {
            if w != v && w != u {
                self.add_edge(v, w, k);
            }
        }
    }

    /// Applies reductions until none applies, collecting forced vertices.
    fn reduce(&mut self, taken: &mut Vec<usize>) -> std::result::Result<(), Infeasible> {
        let n = self.adj.len();
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if !self.alive[v] {
                    continue;
                }
                if self.adj[v].contains_key(&v) {
                    if self.fixed[v] {
                        return Err(Infeasible);
                    }
                    taken.push(v);
                    self.remove(v);
                    changed = true;
                    continue;
                }
                let deg = self.degree(v);
                if deg <= 1 {
                    self.remove(v);
                    changed = true;
                    continue;
                }
                let doubled: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&(_, &k)| k >= 2)
                    .map(|(&w, _)| w)
                    .collect();
                // A 2-cycle through a fixed vertex must be broken at `v`.
                if doubled.iter().any(|&w| self.fixed[w]) {
                    if self.fixed[v] {
                        return Err(Infeasible);
                    }
                    taken.push(v);
                    self.remove(v);
                    changed = true;
                    continue;
                }
                if self.fixed[v] {
                    if let Some(&w) = self.adj[v].keys().find(|&&w| self.fixed[w]) {
                        self.contract(w, v);
                        changed = true;
                        continue;
                    }
                }
                if deg == 2 {
                    let nbrs: Vec<usize> = self.adj[v].keys().copied().collect();
                    match nbrs[..] {
                        // A double edge to a deletable vertex: that vertex
                        // covers every cycle through `v`.
                        [a] => {
                            self.remove(v);
                            self.add_edge(a, a, 1);
                            changed = true;
                        }
                        [a, b] if self.fixed[v] || !self.fixed[a] || !self.fixed[b] => {
                            self.remove(v);
                            self.add_edge(a, b, 1);
                            changed = true;
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// Cycle rank `m - n + c` of the remaining multigraph against the best
    /// possible drop per deletable vertex.
    fn lower_bound(&self) -> usize {
        let n = self.adj.len();
        let verts: Vec<usize> = (0..n).filter(|&v| self.alive[v]).collect();
        if verts.is_empty() {
            return 0;
        }
        let mut m = 0;
        let mut gains = Vec::new();
        for &v in &verts {
            let d = self.degree(v);
            m += d;
            if !self.fixed[v] {
                gains.push(d.saturating_sub(1));
            }
        }
        m /= 2;
        let mut seen = vec![false; n];
        let mut comps = 0;
        for &s in &verts {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.adj[u].keys() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        let mut rank = (m + comps).saturating_sub(verts.len());
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut count = 0;
        for gain in gains {
            if rank == 0 {
                break;
            }
            rank = rank.saturating_sub(gain);
            count += 1;
        }
        count
    }
}

struct Brancher {
    best: Option<VertexSet>,
    bound: usize,
}

impl Brancher {
    fn solve(&mut self, mut g: Multigraph, mut taken: Vec<usize>) {
        if g.reduce(&mut taken).is_err() || taken.len() >= self.bound {
            return;
        }
        let Some(v) = (0..g.adj.len())
            .filter(|&v| g.alive[v] && !g.fixed[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        else {
            if !g.alive.contains(&true) {
                taken.sort_unstable();
                self.bound = taken.len();
                self.best = Some(taken);
            }
            return;
        };
        if taken.len() + g.lower_bound() >= self.bound {
            return;
        }
        let mut with = g.clone();
        with.remove(v);
        let mut with_taken = taken.clone();
        with_taken.push(v);
        self.solve(with, with_taken);
        g.fixed[v] = true;
        self.solve(g, taken);
    }
}

/// A minimum feedback vertex set. Deterministic: ties are broken by the
/// fixed branching order (highest degree first, then lowest id).
pub fn min_fvs_exact(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let cap = if g.is_subcubic() {
        limits.fvs_exact_subcubic.max(limits.fvs_exact)
    } else {
        limits.fvs_exact
    };
    Error::check_capacity("exact FVS input", g.n(), cap)?;
    let mut b = Brancher {
        best: None,
        bound: g.n() + 1,
    };
    b.solve(Multigraph::from_graph(g), Vec::new());
    let set = b
        .best
        .ok_or_else(|| Error::Invariant("branching found no feedback vertex set".into()))?;
    if !g.is_feedback_vertex_set(&set) {
        return Err(Error::Invariant(format!(
            "branching returned {set:?}, which misses a cycle"
        )));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_graphs;
    use crate::generate::{complete, cycle, path, petersen, random_cactus, random_subcubic};
    use crate::oracle::oracle_min_fvs;

    #[test]
    fn named_graphs() {
        let lim = Limits::default();
        assert_eq!(min_fvs_exact(&complete(4).unwrap(), &lim).unwrap().len(), 2);
        assert_eq!(min_fvs_exact(&complete(6).unwrap(), &lim).unwrap().len(), 4);
        assert!(min_fvs_exact(&path(6).unwrap(), &lim).unwrap().is_empty());
        assert_eq!(min_fvs_exact(&cycle(7).unwrap(), &lim).unwrap().len(), 1);
        assert_eq!(min_fvs_exact(&petersen(), &lim).unwrap().len(), 3);
    }

    #[test]
    fn very_nice_cactus_needs_one_vertex_per_cycle() {
        for seed in 0..20 {
            let g = random_cactus(seed, 5, true).unwrap();
            assert_eq!(min_fvs_exact(&g, &Limits::default()).unwrap().len(), 5);
        }
    }

    #[test]
    fn matches_oracle() {
        let lim = Limits::default();
        for g in all_graphs(7).unwrap() {
            let got = min_fvs_exact(&g, &lim).unwrap();
            assert_eq!(got.len(), oracle_min_fvs(&g, &lim).unwrap().len(), "{g:?}");
        }
        for seed in 0..30 {
            let g = random_subcubic(seed, 30, 12).unwrap();
            let got = min_fvs_exact(&g, &lim).unwrap();
            assert_eq!(got.len(), oracle_min_fvs(&g, &lim).unwrap().len());
        }
    }
}
