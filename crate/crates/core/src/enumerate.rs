//! Canonical forms and exhaustive enumeration of small graphs up to
//! isomorphism.
//!
//! Canonical labelling uses colour refinement with individualisation; twins
//! (vertices with the same neighbourhood apart from each other) are tried only
//! once per cell, which keeps highly symmetric graphs cheap.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical forms pack the upper adjacency triangle into a `u128`.
pub const MAX_CANONICAL_VERTICES: usize = 16;

/// An isomorphism invariant that identifies a graph up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.bits >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::from_edges(self.n, edges).expect("canonical bits encode a simple graph")
    }
}

/// Repeatedly splits colour classes by the multiset of neighbour colours
/// until stable. Colour ids are assigned by sorted signature, so the result
/// does not depend on the vertex numbering.
fn refine(g: &Graph, colours: &mut [usize]) {
    let n = g.n();
    let mut classes = count_classes(colours);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                next += 1;
            }
            colours[sigs[i].2] = next;
        }
        let now = next + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colours: &[usize]) -> usize {
    colours.iter().collect::<BTreeSet<_>>().len()
}

fn certificate(g: &Graph, colours: &[usize]) -> u128 {
    let n = g.n();
    let mut bits = 0u128;
    let mut bit = 0;
    let mut at = vec![0; n];
    for v in 0..n {
        at[colours[v]] = v;
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(at[i], at[j]) {
                bits |= 1 << bit;
            }
            bit += 1;
        }
    }
    bits
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| -> Vec<usize> {
        g.neighbors(a).iter().copied().filter(|&w| w != b).collect()
    };
    strip(u, v) == strip(v, u)
}

fn search(g: &Graph, colours: Vec<usize>, best: &mut Option<u128>) {
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colours {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let cert = certificate(g, &colours);
        if best.is_none_or(|b| cert < b) {
            *best = Some(cert);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(x, &c)| 2 * c + usize::from(c == target && x != v))
            .collect();
        refine(g, &mut next);
        search(g, next, best);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Error::check_capacity("canonical form input", g.n(), MAX_CANONICAL_VERTICES)?;
    let mut colours: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    refine(g, &mut colours);
    let mut best = None;
    search(g, colours, &mut best);
    Ok(CanonicalForm {
        n: g.n(),
        bits: best.unwrap_or(0),
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.m() == b.m() && canonical_form(a)? == canonical_form(b)?)
}

/// Extends each graph by one vertex joined to every allowed neighbour set and
/// keeps one representative per isomorphism class.
fn grow(
    layer: &BTreeSet<CanonicalForm>,
    allowed: impl Fn(&Graph, &[usize]) -> bool,
) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    for form in layer {
        let g = form.to_graph();
        let n = g.n();
        let base = g.edges();
        for mask in 0u32..1 << n {
            let nbrs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !allowed(&g, &nbrs) {
                continue;
            }
            let mut edges = base.clone();
            edges.extend(nbrs.iter().map(|&u| (u, n)));
            let h = Graph::from_edges(n + 1, edges).expect("extension is simple");
            out.insert(canonical_form(&h).expect("size checked by caller"));
        }
    }
    out
}

fn layers(
    max_n: usize,
    allowed: impl Fn(&Graph, &[usize]) -> bool,
) -> Result<Vec<Graph>> {
    Error::check_capacity("enumeration size", max_n, MAX_CANONICAL_VERTICES)?;
    let mut all = Vec::new();
    if max_n == 0 {
        return Ok(all);
    }
    let mut layer = BTreeSet::from([canonical_form(&Graph::new(1))?]);
    all.extend(layer.iter().map(|f| f.to_graph()));
    for _ in 2..=max_n {
        layer = grow(&layer, &allowed);
        all.extend(layer.iter().map(|f| f.to_graph()));
    }
    Ok(all)
}

/// Every graph on `1..=max_n` vertices, one per isomorphism class, ordered by
/// vertex count and then canonical form.
pub fn all_graphs(max_n: usize) -> Result<Vec<Graph>> {
    layers(max_n, |_, _| true)
}

/// Every connected graph on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(max_n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Every connected subcubic graph on `1..=max_n` vertices up to isomorphism.
///
/// Each such graph arises from a smaller one by adding a non-cut vertex, so
/// growing only through connected subcubic graphs reaches all of them.
pub fn connected_subcubic_graphs(max_n: usize) -> Result<Vec<Graph>> {
    layers(max_n, |g, nbrs| {
        !nbrs.is_empty() && nbrs.len() <= 3 && nbrs.iter().all(|&u| g.degree(u) < 3)
    })
}

/// Every subcubic very nice cactus on at most `max_n` vertices up to
/// isomorphism: trees of cycles joined by bridges.
pub fn subcubic_very_nice_cacti(max_n: usize) -> Result<Vec<Graph>> {
    Error::check_capacity("enumeration size", max_n, MAX_CANONICAL_VERTICES)?;
    let mut seen = BTreeSet::new();
    let mut frontier: Vec<CanonicalForm> = Vec::new();
    for len in 3..=max_n {
        let c = crate::generate::cycle(len)?;
        let f = canonical_form(&c)?;
        if seen.insert(f) {
            frontier.push(f);
        }
    }
    while let Some(form) = frontier.pop() {
        let g = form.to_graph();
        let n = g.n();
        for len in 3..=max_n.saturating_sub(n) {
            for anchor in g.vertices().filter(|&v| g.degree(v) == 2) {
                let mut edges = g.edges();
                edges.extend((0..len).map(|i| (n + i, n + (i + 1) % len)));
                edges.push((anchor, n));
                let h = Graph::from_edges(n + len, edges)?;
                let f = canonical_form(&h)?;
                if seen.insert(f) {
                    frontier.push(f);
                }
            }
        }
    }
    Ok(seen.into_iter().map(CanonicalForm::to_graph).collect())
}
