//! Simple undirected graphs on at most 64 vertices with bitset adjacency.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order. Every vertex set fits in one machine word.
pub const MAX_ORDER: usize = 64;

/// An immutable finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive. Family generators may attach
/// human-readable vertex labels (`"u3"`, `"v0'"`, ...); labels never affect
/// equality of the underlying structure (see [`Graph::same_structure`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], labels: None })
    }

    /// Builds a graph from rows of an adjacency matrix; the rows must already
    /// be symmetric and irreflexive.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        debug_assert!((0..n).all(|u| !adj[u].contains(u)));
        debug_assert!((0..n).all(|u| adj[u].iter().all(|v| v < n && adj[v].contains(u))));
        Graph { n, adj, labels: None }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Attaches labels; `labels.len()` must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "label array must have one entry per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Structural equality ignoring labels.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n).map(|u| (full - self.adj[u]).without(u)).collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// `G o K1`: vertex `i + n` is a new pendant attached to vertex `i`,
    /// labelled `v<i>`.
    pub fn corona_k1(&self) -> Result<Graph> {
        let n = self.n;
        if 2 * n > MAX_ORDER {
            return Err(Error::InvalidOrder(2 * n));
        }
        let mut adj = self.adj.clone();
        adj.extend((0..n).map(VertexSet::singleton));
        for i in 0..n {
            adj[i].insert(i + n);
        }
        let mut labels: Vec<String> = match &self.labels {
            Some(l) => l.clone(),
            None => (0..n).map(|i| format!("u{i}")).collect(),
        };
        labels.extend((0..n).map(|i| format!("v{i}")));
        Ok(Graph { n: 2 * n, adj, labels: Some(labels) })
    }

    /// A new graph with one extra vertex adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet, label: Option<String>) -> Result<Graph> {
        let n = self.n;
        if n + 1 > MAX_ORDER {
            return Err(Error::InvalidOrder(n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            let bad = (nbrs - self.vertices()).min().unwrap_or(n);
            return Err(Error::InvalidEdge { u: n, v: bad, n: n + 1 });
        }
        let mut adj = self.adj.clone();
        for v in nbrs {
            adj[v].insert(n);
        }
        adj.push(nbrs);
        let labels = match (&self.labels, label) {
            (Some(l), lab) => {
                let mut l = l.clone();
                l.push(lab.unwrap_or_else(|| n.to_string()));
                Some(l)
            }
            (None, Some(lab)) => {
                let mut l: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                l.push(lab);
                Some(l)
            }
            (None, None) => None,
        };
        Ok(Graph { n: n + 1, adj, labels })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.adj[u] {
                adj[perm[u]].insert(perm[v]);
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for v in 0..self.n {
                out[perm[v]] = l[v].clone();
            }
            out
        });
        Graph { n: self.n, adj, labels }
    }

    /// The subgraph induced by `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(verts.len())?;
        for (i, &v) in verts.iter().enumerate() {
            for w in self.adj[v] & keep {
                g.adj[i].insert(index[w]);
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(verts.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(g)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Some pair `{u, v}` (lexicographically first) with at least `k` common
    /// neighbours, or `None` when the graph has no `K_{2,k}` subgraph.
    /// With `k = 2` this is the 4-cycle test.
    pub fn common_neighbor_excess(&self, k: usize) -> Option<(usize, usize)> {
        let k = k.max(1);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if (self.adj[u] & self.adj[v]).len() >= k {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_c4_free(&self) -> bool {
        self.common_neighbor_excess(2).is_none()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    /// All-pairs hop distances by breadth-first search.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut dist = vec![DistanceMatrix::INF; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for w in self.adj[u] {
                    if row[w] == DistanceMatrix::INF {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    /// Parses the plain edge-list format: a header line holding `n`, then one
    /// `u v` pair per line. `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut offset = 0usize;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("").trim();
            let line_offset = offset;
            offset += line.len();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    offset: line_offset,
                    msg: format!("expected a non-negative integer, found `{s}`"),
                })
            };
            match (n, fields.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (None, _) => {
                    return Err(Error::Parse {
                        offset: line_offset,
                        msg: "expected the vertex count on the first line".into(),
                    })
                }
                (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
                (Some(_), _) => {
                    return Err(Error::Parse {
                        offset: line_offset,
                        msg: "expected an edge `u v`".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse { offset: 0, msg: "empty edge list".into() })?;
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Hop distances between all vertex pairs; `None` across components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    pub(crate) const INF: u8 = u8::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            Self::INF => None,
            d => Some(d as u32),
        }
    }

    /// Raw row for `u`; unreachable entries hold `u8::MAX`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u8] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &d in &self.dist {
            if d == Self::INF {
                return None;
            }
            best = best.max(d as u32);
        }
        Some(best)
    }

    /// `layers(u)[d]` is the set of vertices at distance exactly `d` from `u`.
    pub fn layers(&self, u: usize) -> Vec<VertexSet> {
        let row = self.row(u);
        let max = row.iter().filter(|&&d| d != Self::INF).max().copied().unwrap_or(0) as usize;
        let mut out = vec![VertexSet::EMPTY; max + 1];
        for (v, &d) in row.iter().enumerate() {
            if d != Self::INF {
                out[d as usize].insert(v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_path_and_single_vertex() {
        let p4 = path(4);
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(!g.is_connected());
    }

    #[test]
    fn invalid_edges_rejected() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::InvalidEdge { u: 0, v: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::InvalidEdge { u: 1, v: 1, n: 3 }));
        assert_eq!(Graph::new(0, &[]), Err(Error::InvalidOrder(0)));
        assert_eq!(Graph::new(65, &[]), Err(Error::InvalidOrder(65)));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement().edge_count(), 0);
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn corona_small() {
        let k2 = Graph::new(1, &[]).unwrap().corona_k1().unwrap();
        assert!(k2.same_structure(&Graph::complete(2).unwrap()));
        let c = path(2).corona_k1().unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.is_tree());
        assert_eq!(c.label(2), "v0");
        assert!(c.has_edge(0, 2) && c.has_edge(1, 3));
    }

    #[test]
    fn distances_basic() {
        let d = path(4).distances();
        assert_eq!(d.get(0, 3), Some(3));
        let k4 = Graph::complete(4).unwrap().distances();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.get(u, v), Some(if u == v { 0 } else { 1 }));
            }
        }
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.distances().get(0, 1), None);
        assert!(!two.is_connected());
    }

    #[test]
    fn c4_detection() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.common_neighbor_excess(2), Some((0, 2)));
        assert!(path(7).is_c4_free());
        assert!(Graph::complete(4).unwrap().common_neighbor_excess(2).is_some());
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let text = "# a path\n4\n0 1\n1 2 # middle\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        match Graph::parse_edge_list("3\n0 x\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Graph::parse_edge_list("3\n0 5\n"), Err(Error::InvalidEdge { .. })));
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = path(4);
        let sub = p4.induced(VertexSet::from_iter([1usize, 2, 3])).unwrap();
        assert_eq!(sub, path(3));
        let rev = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(rev, p4);
    }
}
