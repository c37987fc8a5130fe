//! Deterministic graph families and seeded random generators.
//!
//! Every random generator takes an explicit 64-bit seed; the same seed always
//! yields the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::SpiderPattern;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("a path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Validation("a cycle needs at least three vertices".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("a complete graph needs at least one vertex".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,s}` with centre 0.
pub fn star(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::Validation("a star needs at least one leaf".into()));
    }
    Graph::from_edges(s + 1, (1..=s).map(|i| (0, i)))
}

/// The subdivided star `S_{w,x,y,z}`: centre 0, then each tentacle's vertices
/// numbered outward from the centre, tentacles in the pattern's order.
pub fn spider(p: &SpiderPattern) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in p.lengths() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("spider edges are valid")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>())
        .expect("petersen edges are valid")
}

/// Applies a uniformly random relabelling.
fn shuffle_labels(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("relabelling preserves validity")
}

struct Builder {
    adj: Vec<Vec<usize>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            adj: vec![Vec::new(); n],
        }
    }

    fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        true
    }

    fn add_cycle(&mut self, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|_| self.add_vertex()).collect();
        for i in 0..len {
            self.add_edge(vs[i], vs[(i + 1) % len]);
        }
        vs
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn build(self) -> Graph {
        let n = self.adj.len();
        let edges: Vec<(usize, usize)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        Graph::from_edges(n, edges).expect("builder edges are valid")
    }
}

/// A random connected subcubic graph on `n` vertices: a random tree of
/// maximum degree 3 plus about `extra_edges` additional edges.
pub fn random_subcubic(seed: u64, n: usize, extra_edges: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("need at least one vertex".into()));
    }
    let mut rng = rng(seed);
    let mut b = Builder::new(n);
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| b.degree(u) < 3).collect();
        let u = *open.choose(&mut rng).expect("a tree always has a leaf");
        b.add_edge(u, v);
    }
    let mut added = 0;
    for _ in 0..extra_edges * 8 {
        if added == extra_edges {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if b.degree(u) < 3 && b.degree(v) < 3 && b.add_edge(u, v) {
            added += 1;
        }
    }
    let g = b.build();
    Ok(shuffle_labels(&g, &mut rng))
}

/// A random connected cactus with `cycles` vertex-disjoint cycles and
/// maximum degree 3. With `very_nice` every vertex lies on a cycle; otherwise
/// cycles may be joined through short paths and carry pendant vertices.
pub fn random_cactus(seed: u64, cycles: usize, very_nice: bool) -> Result<Graph> {
    if cycles == 0 {
        return Err(Error::Validation("need at least one cycle".into()));
    }
    let mut rng = rng(seed);
    let mut b = Builder::new(0);
    let len = rng.gen_range(3..=6);
    b.add_cycle(len);
    for _ in 1..cycles {
        let open: Vec<usize> = (0..b.n()).filter(|&v| b.degree(v) < 3).collect();
        let mut anchor = *open.choose(&mut rng).expect("cactus keeps open vertices");
        if !very_nice {
            for _ in 0..rng.gen_range(0..=2) {
                let p = b.add_vertex();
                b.add_edge(anchor, p);
                anchor = p;
            }
        }
        let len = rng.gen_range(3..=6);
        let cyc = b.add_cycle(len);
        b.add_edge(anchor, cyc[0]);
    }
    if !very_nice {
        for _ in 0..rng.gen_range(0..=2) {
            let open: Vec<usize> = (0..b.n()).filter(|&v| b.degree(v) < 3).collect();
            if let Some(&v) = open.choose(&mut rng) {
                let leaf = b.add_vertex();
                b.add_edge(v, leaf);
            }
        }
    }
    let g = b.build();
    Ok(shuffle_labels(&g, &mut rng))
}

/// A random connected graph with no proper bridge: a 2-edge-connected ear
/// construction on about `n` vertices, plus a few chords and pendant leaves.
pub fn random_quasi_bridgeless(seed: u64, n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Validation("need at least three vertices".into()));
    }
    let mut rng = rng(seed);
    let mut b = Builder::new(0);
    let first = rng.gen_range(3..=n.min(5));
    b.add_cycle(first);
    while b.n() < n {
        let room = n - b.n();
        let a = rng.gen_range(0..b.n());
        let c = rng.gen_range(0..b.n());
        let min_len = if a == c { 2 } else { 1 };
        if room < min_len {
            break;
        }
        let len = rng.gen_range(min_len..=room.min(4));
        let mut prev = a;
        for _ in 0..len {
            let p = b.add_vertex();
            b.add_edge(prev, p);
            prev = p;
        }
        b.add_edge(prev, c);
    }
    let chords = rng.gen_range(0..=n / 2);
    for _ in 0..chords {
        let u = rng.gen_range(0..b.n());
        let v = rng.gen_range(0..b.n());
        b.add_edge(u, v);
    }
    if rng.gen_bool(0.3) {
        let v = rng.gen_range(0..b.n());
        let leaf = b.add_vertex();
        b.add_edge(v, leaf);
    }
    let g = b.build();
    Ok(shuffle_labels(&g, &mut rng))
}

/// A random 2-connected graph on `n >= 3` vertices built from ears.
fn random_two_connected(b: &mut Builder, rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let first = rng.gen_range(3..=n.min(5));
    let mut vs = b.add_cycle(first);
    while vs.len() < n {
        let room = n - vs.len();
        let a = vs[rng.gen_range(0..vs.len())];
        let mut c = vs[rng.gen_range(0..vs.len())];
        while c == a {
            c = vs[rng.gen_range(0..vs.len())];
        }
        let len = rng.gen_range(1..=room.min(3));
        let mut prev = a;
        for _ in 0..len {
            let p = b.add_vertex();
            vs.push(p);
            b.add_edge(prev, p);
            prev = p;
        }
        b.add_edge(prev, c);
    }
    for _ in 0..rng.gen_range(0..=n) {
        let u = vs[rng.gen_range(0..vs.len())];
        let v = vs[rng.gen_range(0..vs.len())];
        b.add_edge(u, v);
    }
    vs
}

/// A random connected graph on at most `max_n` vertices assembled from
/// random blocks (cycles, cliques, 2-connected ear graphs, single vertices)
/// joined in a tree-like way by bridges.
pub fn random_block_bridge(seed: u64, max_n: usize) -> Result<Graph> {
    if max_n < 2 {
        return Err(Error::Validation("need room for at least two vertices".into()));
    }
    let mut rng = rng(seed);
    let mut b = Builder::new(0);
    loop {
        let room = max_n - b.n();
        if room == 0 {
            break;
        }
        let kind = rng.gen_range(0..5);
        let size = match kind {
            0 => 1,
            1 => rng.gen_range(3..=6),
            2 => rng.gen_range(4..=5),
            _ => rng.gen_range(3..=7),
        }
        .min(room);
        let anchor = if b.n() == 0 {
            None
        } else {
            Some(rng.gen_range(0..b.n()))
        };
        let vs = match (kind, size) {
            (_, 1) | (_, 2) => (0..size).map(|_| b.add_vertex()).collect::<Vec<_>>(),
            (1, s) => b.add_cycle(s),
            (2, s) => {
                let vs: Vec<usize> = (0..s).map(|_| b.add_vertex()).collect();
                for i in 0..s {
                    for j in i + 1..s {
                        b.add_edge(vs[i], vs[j]);
                    }
                }
                vs
            }
            (_, s) => random_two_connected(&mut b, &mut rng, s),
        };
        if vs.len() == 2 {
            b.add_edge(vs[0], vs[1]);
        }
        if let Some(a) = anchor {
            let target = vs[rng.gen_range(0..vs.len())];
            b.add_edge(a, target);
        }
        if b.n() >= 4 && rng.gen_bool(0.25) {
            break;
        }
    }
    let g = b.build();
    Ok(shuffle_labels(&g, &mut rng))
}
