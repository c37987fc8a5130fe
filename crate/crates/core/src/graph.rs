//! Undirected simple graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built: operations that "modify" a graph
//! return a new one. Vertex sets are plain sorted `Vec<usize>`s.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A set of vertices, kept sorted ascending and free of duplicates.
pub type VertexSet = Vec<usize>;

/// An undirected edge, normalised so that `.0 < .1`.
pub type Edge = (usize, usize);

pub fn normalize_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Sorts and deduplicates a vertex collection.
pub fn to_vertex_set(items: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut set: Vec<usize> = items.into_iter().collect();
    set.sort_unstable();
    set.dedup();
    set
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<Option<String>>>,
}

/// A graph carved out of a host graph, with the map back to host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_host[i]` is the host id of local vertex `i`.
    pub to_host: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, local: &[usize]) -> VertexSet {
        to_vertex_set(local.iter().map(|&v| self.to_host[v]))
    }

    pub fn lift_edge(&self, (u, v): Edge) -> Edge {
        normalize_edge(self.to_host[u], self.to_host[v])
    }

    /// Inverse of `to_host`, `None` for host vertices outside the subgraph.
    pub fn from_host(&self, host_n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; host_n];
        for (local, &host) in self.to_host.iter().enumerate() {
            map[host] = Some(local);
        }
        map
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        g.finish();
        Ok(g)
    }

    /// Sorts and dedups the adjacency lists and recounts edges.
    fn finish(&mut self) {
        let mut twice = 0;
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        self.m = twice / 2;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum degree at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref()?.get(v)?.as_deref()
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let n = self.n();
        let labels = self.labels.get_or_insert_with(|| vec![None; n]);
        labels[v] = Some(label.into());
    }

    /// The vertex carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l.as_deref() == Some(label))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph after deleting the vertices flagged in `removed`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for the empty graph and for every connected graph.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Each connected component as its own graph, with back-maps.
    pub fn connected_components(&self) -> Vec<Subgraph> {
        self.components()
            .iter()
            .map(|c| self.induced_subgraph(c))
            .collect()
    }

    /// The subgraph induced by `vertices` (any order; relabelled in sorted order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let to_host = to_vertex_set(vertices.iter().copied());
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in to_host.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(to_host.len());
        for (i, &v) in to_host.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    g.adj[i].push(local[w]);
                }
            }
        }
        g.finish();
        if let Some(labels) = &self.labels {
            g.labels = Some(to_host.iter().map(|&v| labels[v].clone()).collect());
        }
        Subgraph { graph: g, to_host }
    }

    /// The subgraph obtained by deleting a vertex set.
    pub fn without_vertices(&self, removed: &[usize]) -> Subgraph {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// The spanning subgraph without the given edges; vertex ids are unchanged.
    pub fn without_edges(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.adj[u].retain(|&w| w != v);
            g.adj[v].retain(|&w| w != u);
        }
        g.finish();
        g
    }

    /// Adds edges, returning a new graph.
    pub fn with_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut all = self.edges();
        all.extend_from_slice(edges);
        let mut g = Graph::from_edges(self.n(), all)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.n(), edges).expect("union of valid graphs is valid")
    }

    /// The `k`-subdivision: every edge becomes a path with `k` new internal
    /// vertices. Original ids are kept; new vertices follow in edge order.
    pub fn subdivide(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::Validation("subdivision count must be at least 1".into()));
        }
        let mut next = self.n();
        let mut edges = Vec::with_capacity((k + 1) * self.m);
        for (u, v) in self.edges() {
            let mut prev = u;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
        }
        let mut g = Graph::from_edges(next, edges)?;
        if let Some(labels) = &self.labels {
            let mut all = labels.clone();
            all.resize(next, None);
            g.labels = Some(all);
        }
        Ok(g)
    }

    /// Whether the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Whether every cycle meets `set`.
    pub fn is_feedback_vertex_set(&self, set: &[usize]) -> bool {
        self.without_vertices(set).graph.is_forest()
    }

    /// Whether no two members of `set` are adjacent.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| u == v || !self.has_edge(u, v)))
    }

    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        self.edges().iter().all(|&(u, v)| inside[u] || inside[v])
    }

    /// Serialises in the edge-list text format: `n`, then one sorted `u v`
    /// line per edge. Vertex labels are written as `# label` comments.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(labels) = &self.labels {
            for (v, l) in labels.iter().enumerate() {
                if let Some(l) = l {
                    out.push_str(&format!("# label {v} {l}\n"));
                }
            }
        }
        out.push_str(&format!("{}\n", self.n()));
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format.
    ///
    /// The first non-comment line holds the vertex count `n`; each further
    /// non-comment line is `u v` with `0 <= u, v < n`. Lines starting with `#`
    /// are comments (a `# label <v> <text>` comment attaches a label to `v`),
    /// blank lines are skipped and duplicate edges collapse.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let mut parts = comment.trim().splitn(3, char::is_whitespace);
                if parts.next() == Some("label") {
                    if let (Some(v), Some(text)) = (parts.next(), parts.next()) {
                        if let Ok(v) = v.parse::<usize>() {
                            labels.push((v, text.trim().to_string()));
                        }
                    }
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_num = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, found {s:?}"),
                })
            };
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "expected the vertex count on its own line".into(),
                        });
                    }
                    n = Some(parse_num(fields[0])?);
                }
                Some(n) => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected `u v`, found {line:?}"),
                        });
                    }
                    let u = parse_num(fields[0])?;
                    let v = parse_num(fields[1])?;
                    if u >= n || v >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex out of range 0..{n}"),
                        });
                    }
                    if u == v {
                        return Err(Error::Validation(format!(
                            "self-loop at vertex {u} on line {line_no}"
                        )));
                    }
                    edges.push((u, v));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        let mut g = Graph::from_edges(n, edges)?;
        for (v, l) in labels {
            if v < n {
                g.set_label(v, l);
            }
        }
        Ok(g)
    }

    /// Plain DOT dump for external rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            match self.label(v) {
                Some(l) => out.push_str(&format!("  {v} [label=\"{l}\"];\n")),
                None => out.push_str(&format!("  {v};\n")),
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = Graph::parse("3\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_k4() {
        let g = Graph::parse("4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3").unwrap();
        assert!(g.is_complete());
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(Graph::parse("2\n0 0"), Err(Error::Validation(_))));
    }

    #[test]
    fn reports_line_numbers() {
        let err = Graph::parse("# header\n3\n0 1\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 4,
                message: "expected a non-negative integer, found \"x\"".into()
            }
        );
        assert!(matches!(Graph::parse("3\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("3\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("# only comments"), Err(Error::Parse { .. })));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::parse("3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn text_round_trip_keeps_labels() {
        let mut g = Graph::from_edges(3, [(2, 0), (1, 2)]).unwrap();
        g.set_label(1, "x'");
        let text = g.to_text();
        assert_eq!(text, "# label 1 x'\n3\n0 2\n1 2\n");
        let back = Graph::parse(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn components_of_union() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let g = p3.disjoint_union(&c3);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].graph.n(), 3);
        assert_eq!(comps[1].graph.n(), 3);
        assert_eq!(comps[1].to_host, vec![3, 4, 5]);
        assert_eq!(comps.iter().map(|c| c.graph.m()).sum::<usize>(), g.m());
    }

    #[test]
    fn components_of_connected_and_edgeless() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let comps = c5.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph, c5);
        assert_eq!(Graph::new(4).connected_components().len(), 4);
    }

    #[test]
    fn subdivision_counts() {
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c6 = c3.subdivide(1).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!(c6.vertices().all(|v| c6.degree(v) == 2) && c6.is_connected());

        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.subdivide(2).unwrap();
        assert_eq!((s.n(), s.m()), (16, 18));

        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p5 = p2.subdivide(3).unwrap();
        assert_eq!((p5.n(), p5.m()), (5, 4));
        assert_eq!((p5.degree(0), p5.degree(1)), (1, 1));
        assert!(p5.is_forest() && p5.is_connected());
        assert!(p2.subdivide(0).is_err());
    }

    #[test]
    fn predicates() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_forest());
        assert!(c4.is_feedback_vertex_set(&[2]));
        assert!(c4.is_independent_set(&[0, 2]));
        assert!(!c4.is_independent_set(&[0, 1]));
        assert!(c4.is_vertex_cover(&[1, 3]));
        assert!(!c4.is_vertex_cover(&[1]));
    }
}
