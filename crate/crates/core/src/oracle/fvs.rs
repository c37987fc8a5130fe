//! Branch and bound for minimum (independent) feedback vertex sets.
//!
//! Vertices are open, taken into the solution, or kept out of it. Each node
//! peels the remaining graph to its 2-core, forces any open vertex with two
//! edges into the same kept tree, and bounds with a greedy cycle packing and a
//! degree count. Branching takes the lowest open core vertex first, so the
//! first optimum found is the lexicographically least one.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Open,
    Taken,
    Kept,
}

struct Search<'a> {
    g: &'a Graph,
    independent: bool,
    best: Option<VertexSet>,
    /// Only solutions strictly smaller than this are accepted.
    bound: usize,
}

/// Vertices of the 2-core of the graph without taken vertices.
fn core(g: &Graph, status: &[Status]) -> Vec<bool> {
    let n = g.n();
    let mut alive: Vec<bool> = status.iter().map(|&s| s != Status::Taken).collect();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                g.neighbors(v).iter().filter(|&&w| alive[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] < 2).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

enum Propagation {
    Dead,
    Done { core: Vec<bool>, taken: usize },
}

impl Search<'_> {
    fn take(&self, status: &mut [Status], v: usize) {
        status[v] = Status::Taken;
        if self.independent {
            for &w in self.g.neighbors(v) {
                if status[w] == Status::Open {
                    status[w] = Status::Kept;
                }
            }
        }
    }

    /// Applies forced moves until none remain.
    fn propagate(&self, status: &mut [Status], mut taken: usize) -> Propagation {
        let g = self.g;
        loop {
            let core = core(g, status);
            let mut parent: Vec<usize> = (0..g.n()).collect();
            for (u, v) in g.edges() {
                if core[u] && core[v] && status[u] == Status::Kept && status[v] == Status::Kept {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    if a == b {
                        return Propagation::Dead;
                    }
                    parent[a] = b;
                }
            }
            let mut forced = None;
            'scan: for v in g.vertices() {
                if !core[v] || status[v] != Status::Open {
                    continue;
                }
                let mut roots: Vec<usize> = Vec::new();
                for &w in g.neighbors(v) {
                    if core[w] && status[w] == Status::Kept {
                        let r = find(&mut parent, w);
                        if roots.contains(&r) {
                            forced = Some(v);
                            break 'scan;
                        }
                        roots.push(r);
                    }
                }
            }
            match forced {
                Some(v) => {
                    self.take(status, v);
                    taken += 1;
                }
                None => return Propagation::Done { core, taken },
            }
        }
    }

    fn lower_bound(&self, status: &[Status], core: &[bool]) -> usize {
        packing_bound(self.g, status, core).max(degree_bound(self.g, status, core))
    }

    fn solve(&mut self, mut status: Vec<Status>, taken: usize) {
        if taken >= self.bound {
            return;
        }
        let (core, taken) = match self.propagate(&mut status, taken) {
            Propagation::Dead => return,
            Propagation::Done { core, taken } => (core, taken),
        };
        if !core.contains(&true) {
            if taken < self.bound {
                self.bound = taken;
                self.best = Some(
                    (0..status.len())
                        .filter(|&v| status[v] == Status::Taken)
                        .collect(),
                );
            }
            return;
        }
        if taken + self.lower_bound(&status, &core) >= self.bound {
            return;
        }
        let Some(v) = (0..status.len()).find(|&v| core[v] && status[v] == Status::Open) else {
            return;
        };
        let mut with = status.clone();
        self.take(&mut with, v);
        self.solve(with, taken + 1);
        status[v] = Status::Kept;
        self.solve(status, taken);
    }

    /// Size of a greedy solution, used as the initial bound.
    fn greedy(&self) -> Option<usize> {
        let mut status = vec![Status::Open; self.g.n()];
        let mut taken = 0;
        loop {
            let core = match self.propagate(&mut status, taken) {
                Propagation::Dead => return None,
                Propagation::Done { core, taken: t } => {
                    taken = t;
                    core
                }
            };
            let pick = (0..self.g.n())
                .filter(|&v| core[v] && status[v] == Status::Open)
                .max_by_key(|&v| {
                    let d = self.g.neighbors(v).iter().filter(|&&w| core[w]).count();
                    (d, std::cmp::Reverse(v))
                });
            match pick {
                Some(v) => {
                    self.take(&mut status, v);
                    taken += 1;
                }
                None if core.contains(&true) => return None,
                None => return Some(taken),
            }
        }
    }
}

/// Each open vertex removed from the core lowers the cycle rank
/// `m - n + c` by at most its degree minus one.
fn degree_bound(g: &Graph, status: &[Status], core: &[bool]) -> usize {
    let n_core = core.iter().filter(|&&c| c).count();
    let mut m_core = 0;
    let mut gains = Vec::new();
    for v in g.vertices().filter(|&v| core[v]) {
        let d = g.neighbors(v).iter().filter(|&&w| core[w]).count();
        m_core += d;
        if status[v] == Status::Open {
            gains.push(d - 1);
        }
    }
    m_core /= 2;
    let comps = g
        .components_avoiding(&core.iter().map(|&c| !c).collect::<Vec<_>>())
        .len();
    let mut rank = m_core + comps - n_core;
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

/// Greedily packs short cycles that share no open vertex; each needs its
/// own solution vertex.
fn packing_bound(g: &Graph, status: &[Status], in_core: &[bool]) -> usize {
    let mut st: Vec<Status> = status
        .iter()
        .zip(in_core)
        .map(|(&s, &c)| if c { s } else { Status::Taken })
        .collect();
    let mut count = 0;
    loop {
        let alive = core(g, &st);
        let Some(walk) = shortest_closed_walk(g, &alive) else {
            return count;
        };
        count += 1;
        for v in walk {
            if st[v] == Status::Open {
                st[v] = Status::Taken;
            }
        }
    }
}

/// Vertices of a shortest closed walk through a non-tree edge of a BFS,
/// which always contains a cycle.
fn shortest_closed_walk(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in (0..n).filter(|&v| alive[v]) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        let mut found: Option<(usize, usize)> = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if let Some((len, _)) = &best {
                if 2 * dist[u] + 1 >= *len {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if !alive[w] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    found = Some((u, w));
                    break 'bfs;
                }
            }
        }
        if let Some((u, w)) = found {
            let len = dist[u] + dist[w] + 1;
            if best.as_ref().is_none_or(|b| len < b.0) {
                let mut walk = Vec::new();
                for mut x in [u, w] {
                    while x != usize::MAX {
                        walk.push(x);
                        x = parent[x];
                    }
                }
                best = Some((len, walk));
            }
        }
    }
    best.map(|b| b.1)
}

fn run(g: &Graph, limits: &Limits, independent: bool) -> Result<Option<VertexSet>> {
    let cap = if g.is_subcubic() {
        limits.oracle_subcubic.max(limits.oracle)
    } else {
        limits.oracle
    };
    let what = if independent { "IFVS oracle input" } else { "FVS oracle input" };
    Error::check_capacity(what, g.n(), cap)?;
    let mut search = Search {
        g,
        independent,
        best: None,
        bound: g.n() + 1,
    };
    if let Some(ub) = search.greedy() {
        search.bound = ub + 1;
    }
    search.solve(vec![Status::Open; g.n()], 0);
    Ok(search.best)
}

/// Lexicographically least minimum feedback vertex set.
pub fn oracle_min_fvs(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Ok(run(g, limits, false)?.expect("the whole vertex set is always a feedback vertex set"))
}

/// Lexicographically least minimum independent feedback vertex set, or
/// `None` when the graph has none.
pub fn oracle_min_ifvs(g: &Graph, limits: &Limits) -> Result<Option<VertexSet>> {
    run(g, limits, true)
}
