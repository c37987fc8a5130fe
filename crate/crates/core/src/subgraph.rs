//! Subgraph containment: a general backtracking matcher for small patterns
//! and a specialised search for subdivided stars.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;

/// `embedding[i]` is the host vertex that pattern vertex `i` maps to.
pub type Embedding = Vec<usize>;

/// Default cap on pattern size for [`contains_subgraph`].
pub const DEFAULT_PATTERN_CAP: usize = 12;

/// The subdivided star `S_{w,x,y,z}`: four tentacles of the given lengths
/// (in edges) meeting at a centre. Stored sorted in descending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpiderPattern {
    lengths: [usize; 4],
}

impl SpiderPattern {
    pub fn new(w: usize, x: usize, y: usize, z: usize) -> Result<Self> {
        let mut lengths = [w, x, y, z];
        if lengths.contains(&0) {
            return Err(Error::Validation(
                "spider tentacle lengths must be at least 1".into(),
            ));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SpiderPattern { lengths })
    }

    /// Tentacle lengths, longest first.
    pub fn lengths(&self) -> &[usize; 4] {
        &self.lengths
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.lengths.iter().sum::<usize>()
    }

    pub fn graph(&self) -> Graph {
        generate::spider(self)
    }
}

impl FromStr for SpiderPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Validation(format!("bad spider pattern {s:?}: {e}")))?;
        match parts[..] {
            [w, x, y, z] => SpiderPattern::new(w, x, y, z),
            _ => Err(Error::Validation(format!(
                "spider pattern needs four lengths, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for SpiderPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [w, x, y, z] = self.lengths;
        write!(f, "S_{{{w},{x},{y},{z}}}")
    }
}

/// Checks that `emb` is an injective map from pattern vertices into the host
/// that sends every pattern edge to a host edge.
pub fn validate_embedding(host: &Graph, pattern: &Graph, emb: &[usize]) -> bool {
    if emb.len() != pattern.n() || emb.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut seen = vec![false; host.n()];
    for &v in emb {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    pattern
        .edges()
        .iter()
        .all(|&(a, b)| host.has_edge(emb[a], emb[b]))
}

/// Pattern vertices in search order: each component by BFS from its
/// highest-degree vertex, so every vertex after a component's first has an
/// earlier neighbour.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut comps = pattern.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = vec![false; pattern.n()];
    for comp in comps {
        let start = *comp
            .iter()
            .max_by_key(|&&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("components are nonempty");
        placed[start] = true;
        let first = order.len();
        order.push(start);
        let mut i = first;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in pattern.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&p) = self.order.get(depth) else {
            return true;
        };
        let anchor = self
            .pattern
            .neighbors(p)
            .iter()
            .copied()
            .find(|&q| self.map[q] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(q) => self.host.neighbors(self.map[q]).to_vec(),
            None => self.host.vertices().collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < self.pattern.degree(p) {
                continue;
            }
            let fits = self
                .pattern
                .neighbors(p)
                .iter()
                .all(|&q| self.map[q] == usize::MAX || self.host.has_edge(h, self.map[q]));
            if !fits {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[p] = usize::MAX;
            self.used[h] = false;
        }
        false
    }
}

/// Finds a (not necessarily induced) copy of `pattern` in `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph, cap: usize) -> Result<Option<Embedding>> {
    Error::check_capacity("pattern", pattern.n(), cap)?;
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let mut m = Matcher {
        host,
        pattern,
        order: search_order(pattern),
        map: vec![usize::MAX; pattern.n()],
        used: vec![false; host.n()],
    };
    Ok(m.extend(0).then_some(m.map))
}

struct SpiderSearch<'a> {
    host: &'a Graph,
    lengths: [usize; 4],
    used: Vec<bool>,
    /// Tentacle paths found so far, each starting at a neighbour of the centre.
    paths: Vec<Vec<usize>>,
}

impl SpiderSearch<'_> {
    fn tentacle(&mut self, centre: usize, t: usize) -> bool {
        if t == 4 {
            return true;
        }
        // Equal-length tentacles are interchangeable: force increasing starts.
        let min_start = if t > 0 && self.lengths[t] == self.lengths[t - 1] {
            self.paths[t - 1][0] + 1
        } else {
            0
        };
        for &s in self.host.neighbors(centre) {
            if s < min_start || self.used[s] {
                continue;
            }
            self.used[s] = true;
            self.paths.push(vec![s]);
            if self.grow(centre, t) {
                return true;
            }
            self.paths.pop();
            self.used[s] = false;
        }
        false
    }

    fn grow(&mut self, centre: usize, t: usize) -> bool {
        let path = &self.paths[t];
        if path.len() == self.lengths[t] {
            return self.tentacle(centre, t + 1);
        }
        let tip = *path.last().expect("paths start nonempty");
        for &w in self.host.neighbors(tip) {
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            self.paths[t].push(w);
            if self.grow(centre, t) {
                return true;
            }
            self.paths[t].pop();
            self.used[w] = false;
        }
        false
    }
}

/// Finds a copy of the spider `p` in `host`. The embedding uses the vertex
/// numbering of [`generate::spider`]: centre first, then each tentacle
/// outward, longest tentacle first.
pub fn contains_spider(host: &Graph, p: &SpiderPattern) -> Option<Embedding> {
    let mut centres: Vec<usize> = host.vertices().filter(|&v| host.degree(v) >= 4).collect();
    centres.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
    for c in centres {
        let mut search = SpiderSearch {
            host,
            lengths: p.lengths,
            used: vec![false; host.n()],
            paths: Vec::with_capacity(4),
        };
        search.used[c] = true;
        if search.tentacle(c, 0) {
            let mut emb = vec![c];
            for path in search.paths {
                emb.extend(path);
            }
            return Some(emb);
        }
    }
    None
}

/// Whether `host` is `S_p`-subgraph-free, with a witness when it is not.
pub fn is_spider_free_class_witness(host: &Graph, p: &SpiderPattern) -> (bool, Option<Embedding>) {
    let witness = contains_spider(host, p);
    (witness.is_none(), witness)
}
