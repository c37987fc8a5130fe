//! Turning a minimum feedback vertex set of a connected subcubic graph into
//! an independent one of the same size.
//!
//! The state is a feedback vertex set `F` of degree-3 vertices and a subset
//! `J` of it that is independent and nonseparating. [`make_nice_cactus`]
//! grows `J` until `G - J` is a nice cactus; [`complete_ifvs`] then picks one
//! degree-3 vertex per remaining cycle.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::blocks::bridges_and_blocks;
use crate::cactus::cycle_blocks;
use crate::error::{Error, Result};
use crate::graph::{to_vertex_set, Graph, Subgraph, VertexSet};

fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

/// Replaces every member of `f` that does not have degree 3 by a nearest
/// degree-3 vertex (lowest id among the nearest). The result is still a
/// feedback vertex set and no larger than `f`.
pub fn normalize_degree3(g: &Graph, f: &[usize]) -> Result<VertexSet> {
    if g.is_forest() {
        return Err(Error::Validation("normalisation needs a graph with a cycle".into()));
    }
    if !g.vertices().any(|v| g.degree(v) == 3) {
        return Err(Error::Validation(
            "normalisation needs a vertex of degree 3; cycles are handled directly".into(),
        ));
    }
    if !g.is_connected() || !g.is_subcubic() {
        return Err(Error::Validation("normalisation needs a connected subcubic graph".into()));
    }
    let mut out = Vec::with_capacity(f.len());
    for &v in f {
        out.push(if g.degree(v) == 3 {
            v
        } else {
            nearest_degree3(g, v).expect("connected graph with a degree-3 vertex")
        });
    }
    let out = to_vertex_set(out);
    if !g.is_feedback_vertex_set(&out) {
        return Err(invariant("degree-3 normalisation lost a cycle"));
    }
    Ok(out)
}

fn nearest_degree3(g: &Graph, s: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best: Option<(usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if best.is_some_and(|(d, _)| dist[u] > d) {
            break;
        }
        if g.degree(u) == 3 && best.is_none_or(|b| (dist[u], u) < b) {
            best = Some((dist[u], u));
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    best.map(|(_, v)| v)
}

/// Feedback vertex set `f`, committed subset `j`, and the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformState {
    #[serde(skip)]
    pub host: Graph,
    pub f: VertexSet,
    pub j: VertexSet,
}

impl TransformState {
    pub fn new(host: Graph, f: VertexSet) -> Result<Self> {
        let state = TransformState {
            host,
            f: to_vertex_set(f),
            j: Vec::new(),
        };
        state.check()?;
        Ok(state)
    }

    /// Checks the three state invariants: `F` is a feedback vertex set of
    /// degree-3 vertices, `J` is a subset of `F`, and `J` is independent with
    /// `G - J` connected.
    pub fn check(&self) -> Result<()> {
        let g = &self.host;
        if !g.is_feedback_vertex_set(&self.f) {
            return Err(invariant(format!("F = {:?} misses a cycle", self.f)));
        }
        if let Some(v) = self.f.iter().find(|&&v| g.degree(v) != 3) {
            return Err(invariant(format!("F contains {v} of degree {}", g.degree(*v))));
        }
        if let Some(v) = self.j.iter().find(|v| self.f.binary_search(v).is_err()) {
            return Err(invariant(format!("J contains {v}, which is not in F")));
        }
        if !g.is_independent_set(&self.j) {
            return Err(invariant(format!("J = {:?} is not independent", self.j)));
        }
        if !g.without_vertices(&self.j).graph.is_connected() {
            return Err(invariant(format!("J = {:?} separates the graph", self.j)));
        }
        Ok(())
    }

    /// `G - J` with its map back to host ids.
    pub fn remainder(&self) -> Subgraph {
        self.host.without_vertices(&self.j)
    }

    fn add_to_j(&mut self, v: usize) {
        self.j.push(v);
        self.j.sort_unstable();
    }

    fn replace_in_f(&mut self, old: usize, new: usize) {
        self.f.retain(|&x| x != old);
        self.f.push(new);
        self.f = to_vertex_set(std::mem::take(&mut self.f));
    }

    fn has_j_neighbour(&self, v: usize) -> bool {
        self.host.neighbors(v).iter().any(|w| self.j.binary_search(w).is_ok())
    }

    /// Whether deleting `v` from `G - J` disconnects it.
    fn is_cutvertex_of_remainder(&self, v: usize) -> bool {
        let mut removed = vec![false; self.host.n()];
        for &x in &self.j {
            removed[x] = true;
        }
        removed[v] = true;
        self.host.components_avoiding(&removed).len() > 1
    }
}

/// Two cycles sharing an edge: a cycle plus one ear, in host ids.
struct Theta {
    adj: BTreeMap<usize, Vec<usize>>,
}

impl Theta {
    fn degree(&self, v: usize) -> usize {
        self.adj.get(&v).map_or(0, Vec::len)
    }

    fn add_path(&mut self, path: &[usize]) {
        for w in path.windows(2) {
            self.adj.entry(w[0]).or_default().push(w[1]);
            self.adj.entry(w[1]).or_default().push(w[0]);
        }
    }

    /// The walk from `r` through `first` up to the next vertex of degree 3
    /// in the theta.
    fn walk(&self, r: usize, first: usize) -> Vec<usize> {
        let mut path = vec![r, first];
        while self.degree(*path.last().expect("nonempty")) != 3 {
            let cur = path[path.len() - 1];
            let prev = path[path.len() - 2];
            let next = *self.adj[&cur]
                .iter()
                .find(|&&w| w != prev)
                .expect("theta vertices of degree 2 have two neighbours");
            path.push(next);
        }
        path
    }
}

/// Finds two cycles of `G - J` with a common edge, or `None` when `G - J` is
/// a cactus.
fn find_theta(state: &TransformState) -> Option<Theta> {
    let rem = state.remainder();
    let h = &rem.graph;
    let block = bridges_and_blocks(h)
        .blocks
        .into_iter()
        .find(|b| b.edges.len() > b.vertices.len())?;
    let mut badj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &block.edges {
        badj.entry(u).or_default().push(v);
        badj.entry(v).or_default().push(u);
    }
    for list in badj.values_mut() {
        list.sort_unstable();
    }

    // A cycle through the BFS tree of the block.
    let root = block.vertices[0];
    let mut parent: BTreeMap<usize, usize> = BTreeMap::from([(root, root)]);
    let mut queue = VecDeque::from([root]);
    let mut closing = None;
    'bfs: while let Some(u) = queue.pop_front() {
        for &w in &badj[&u] {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(u);
                queue.push_back(w);
            } else if parent[&u] != w {
                closing = Some((u, w));
                break 'bfs;
            }
        }
    }
    let (u, w) = closing.expect("a 2-connected block has a cycle");
    let up = |mut x: usize| {
        let mut chain = vec![x];
        while parent[&x] != x {
            x = parent[&x];
            chain.push(x);
        }
        chain
    };
    let (pu, pw) = (up(u), up(w));
    let lca = *pu.iter().find(|x| pw.contains(x)).expect("same BFS tree");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let mut back: Vec<usize> = pw.iter().copied().take_while(|&x| x != lca).collect();
    back.reverse();
    cycle.extend(back);
    let on_cycle: Vec<bool> = (0..h.n()).map(|v| cycle.contains(&v)).collect();
    let cycle_edge = |a: usize, b: usize| {
        let k = cycle.len();
        (0..k).any(|i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % k]);
            (x, y) == (a, b) || (y, x) == (a, b)
        })
    };

    // An ear: an edge leaving the cycle, continued back to it avoiding its start.
    let mut sorted_cycle = cycle.clone();
    sorted_cycle.sort_unstable();
    let (x, y) = sorted_cycle
        .iter()
        .find_map(|&x| {
            badj[&x]
                .iter()
                .find(|&&y| !cycle_edge(x, y))
                .map(|&y| (x, y))
        })
        .expect("a 2-connected block that is not a cycle has an ear");
    let mut ear = vec![x, y];
    if !on_cycle[y] {
        let mut prev: BTreeMap<usize, usize> = BTreeMap::from([(y, y), (x, x)]);
        let mut queue = VecDeque::from([y]);
        let mut end = None;
        'ear: while let Some(a) = queue.pop_front() {
            for &b in &badj[&a] {
                if prev.contains_key(&b) {
                    continue;
                }
                prev.insert(b, a);
                if on_cycle[b] {
                    end = Some(b);
                    break 'ear;
                }
                queue.push_back(b);
            }
        }
        let mut tail = vec![end.expect("a block minus one vertex stays connected")];
        while *tail.last().expect("nonempty") != y {
            tail.push(prev[tail.last().expect("nonempty")]);
        }
        tail.pop();
        tail.reverse();
        ear.extend(tail);
    }

    let mut theta = Theta {
        adj: BTreeMap::new(),
    };
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    theta.add_path(&closed.iter().map(|&v| rem.to_host[v]).collect::<Vec<_>>());
    theta.add_path(&ear.iter().map(|&v| rem.to_host[v]).collect::<Vec<_>>());
    Some(theta)
}

/// Grows `J` until `G - J` is a nice cactus, checking the state invariants
/// after every move.
pub fn make_nice_cactus(state: TransformState) -> Result<TransformState> {
    make_nice_cactus_traced(state, |_| {})
}

/// [`make_nice_cactus`], reporting the state after every move.
pub fn make_nice_cactus_traced(
    mut state: TransformState,
    mut on_step: impl FnMut(&TransformState),
) -> Result<TransformState> {
    state.check()?;
    let start_size = state.f.len();
    while let Some(theta) = find_theta(&state) {
        let r = *state
            .f
            .iter()
            .find(|v| theta.adj.contains_key(v))
            .ok_or_else(|| invariant("F misses a cycle of G - J"))?;
        if theta.degree(r) == 3 {
            state.add_to_j(r);
        } else {
            let nbrs = &theta.adj[&r];
            let (a, b) = (theta.walk(r, nbrs[0]), theta.walk(r, nbrs[1]));
            let toward_p = if a.last() < b.last() { a } else { b };
            let mut at = 0;
            loop {
                let r = toward_p[at];
                if theta.degree(r) == 3 {
                    state.add_to_j(r);
                    break;
                }
                let step = toward_p[at + 1..]
                    .iter()
                    .position(|&v| state.host.degree(v) == 3)
                    .ok_or_else(|| invariant("no degree-3 vertex toward the branch vertex"))?;
                let next = at + 1 + step;
                if !state.has_j_neighbour(r) && !state.is_cutvertex_of_remainder(r) {
                    state.add_to_j(r);
                    break;
                }
                state.replace_in_f(r, toward_p[next]);
                at = next;
                state.check()?;
                on_step(&state);
            }
        }
        state.check()?;
        if state.f.len() > start_size {
            return Err(invariant("F grew during the cactus transformation"));
        }
        on_step(&state);
    }
    Ok(state)
}

/// For each cycle of `h` other than `c`, its vertex nearest to `c` (lowest
/// id on ties), in local ids of `h`.
fn nearest_to_cycle(h: &Graph, cycles: &[VertexSet], c: usize) -> VertexSet {
    let mut dist = vec![usize::MAX; h.n()];
    let mut queue = VecDeque::new();
    for &v in &cycles[c] {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    cycles
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != c)
        .map(|(_, cyc)| *cyc.iter().min_by_key(|&&v| (dist[v], v)).expect("cycles are nonempty"))
        .collect()
}

/// Chooses one degree-3 vertex per cycle of the nice cactus `G - J`,
/// adjusting `J` when `G - J` is a very nice cactus. The result is an
/// independent feedback vertex set of degree-3 vertices, no larger than `F`.
pub fn complete_ifvs(state: &TransformState) -> Result<VertexSet> {
    state.check()?;
    let g = &state.host;
    let rem = state.remainder();
    let h = &rem.graph;
    let result = if h.is_forest() {
        state.j.clone()
    } else {
        let cycles = cycle_blocks(h);
        let mut cycle_of = vec![usize::MAX; h.n()];
        for (i, c) in cycles.iter().enumerate() {
            for &v in c {
                if cycle_of[v] != usize::MAX {
                    return Err(invariant("G - J is not a nice cactus"));
                }
                cycle_of[v] = i;
            }
        }
        let lift = |local: &[usize]| -> Vec<usize> { local.iter().map(|&v| rem.to_host[v]).collect() };

        // A degree-3 cycle vertex whose third neighbour lies in G - J on no cycle.
        let easy = h.vertices().find(|&v| {
            cycle_of[v] != usize::MAX
                && h.degree(v) == 3
                && h.neighbors(v)
                    .iter()
                    .any(|&w| cycle_of[w] == usize::MAX)
        });
        if let Some(v) = easy {
            let mut set = state.j.clone();
            set.extend(lift(&nearest_to_cycle(h, &cycles, cycle_of[v])));
            set.push(rem.to_host[v]);
            set
        } else {
            if cycle_of.contains(&usize::MAX) {
                return Err(invariant("a vertex off the cycles should give a degree-3 choice"));
            }
            let Some(&j) = state.j.first() else {
                return Err(invariant("G - J is a very nice cactus but J is empty"));
            };
            let from_host = rem.from_host(g.n());
            let nbrs: Vec<usize> = g
                .neighbors(j)
                .iter()
                .map(|&w| from_host[w].ok_or_else(|| invariant("J is not independent")))
                .collect::<Result<_>>()?;
            if nbrs.len() != 3 {
                return Err(invariant(format!("J vertex {j} does not have degree 3")));
            }
            let mut set: Vec<usize> = state.j.iter().copied().filter(|&x| x != j).collect();
            let c = cycle_of[nbrs[0]];
            if nbrs.iter().all(|&v| cycle_of[v] == c) {
                if cycles[c].len() == 3 {
                    return Err(invariant(format!("J vertex {j} and a triangle induce K4")));
                }
                let (v1, v2) = [(0, 1), (0, 2), (1, 2)]
                    .iter()
                    .map(|&(a, b)| (nbrs[a], nbrs[b]))
                    .find(|&(a, b)| !h.has_edge(a, b))
                    .ok_or_else(|| invariant("three neighbours on a long cycle are pairwise adjacent"))?;
                set.extend(lift(&[v1, v2]));
                set.extend(lift(&nearest_to_cycle(h, &cycles, c)));
            } else {
                let v1 = (0..3)
                    .find(|&i| {
                        let others: Vec<usize> = (0..3).filter(|&k| k != i).map(|k| nbrs[k]).collect();
                        cycle_of[others[0]] != cycle_of[others[1]]
                    })
                    .map(|i| nbrs[i])
                    .ok_or_else(|| invariant("no neighbour of j separates the other two"))?;
                set.push(rem.to_host[v1]);
                set.extend(lift(&nearest_to_cycle(h, &cycles, cycle_of[v1])));
            }
            set
        }
    };
    let result = to_vertex_set(result);
    if !g.is_independent_set(&result) {
        return Err(invariant(format!("{result:?} is not independent")));
    }
    if !g.is_feedback_vertex_set(&result) {
        return Err(invariant(format!("{result:?} misses a cycle")));
    }
    if let Some(v) = result.iter().find(|&&v| g.degree(v) != 3) {
        return Err(invariant(format!("{v} has degree {}", g.degree(*v))));
    }
    if result.len() > state.f.len() {
        return Err(invariant("the independent set is larger than F"));
    }
    Ok(result)
}
