//! Maximum matchings and the matching-based locating-dominating sets of
//! twin-free `C4`-free graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::is_twin_free;
use crate::vertex_set::VertexSet;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    /// Unmatched vertices.
    pub mbar: VertexSet,
}

impl Matching {
    /// Validates and normalises a list of edges.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut covered = VertexSet::EMPTY;
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return Err(Error::InvalidEdge { u, v, n: g.order() });
            }
            if covered.contains(u) || covered.contains(v) {
                return Err(Error::BadParams(format!("edges overlap at {{{u}, {v}}}")));
            }
            covered.insert(u);
            covered.insert(v);
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out, mbar: g.vertices() - covered })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: (usize, usize)) -> bool {
        self.edges.binary_search(&(e.0.min(e.1), e.0.max(e.1))).is_ok()
    }

    /// `U_M`: unmatched vertices whose neighbourhood lies inside one matching edge.
    pub fn u_set(&self, g: &Graph) -> VertexSet {
        self.mbar
            .iter()
            .filter(|&x| {
                let nx = g.neighbors(x);
                self.edges.iter().any(|&(u, v)| nx.is_subset(VertexSet::singleton(u).with(v)))
            })
            .collect()
    }
}

/// Edmonds' blossom algorithm. Exposed vertices are processed in increasing
/// order and neighbours are scanned in increasing order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if mate[root].is_none() {
            if let Some(path_end) = augment_from(g, &mate, root) {
                apply(&mut mate, path_end);
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n).filter_map(|u| mate[u].filter(|&v| u < v).map(|v| (u, v))).collect();
    Matching::new(g, &edges).expect("blossom output is a matching")
}

/// Parent pointers of an augmenting path: `(parent, end)` where following
/// `parent` from `end` alternates non-matching / matching edges back to the root.
struct AugPath {
    parent: Vec<Option<usize>>,
    end: usize,
}

fn lca(mate: &[Option<usize>], base: &[usize], parent: &[Option<usize>], a: usize, b: usize) -> usize {
    let mut seen = vec![false; base.len()];
    let mut a = a;
    loop {
        a = base[a];
        seen[a] = true;
        match mate[a] {
            None => break,
            Some(m) => a = parent[m].expect("tree vertex"),
        }
    }
    let mut b = b;
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b].expect("odd vertex is matched")].expect("tree vertex");
    }
}

#[allow(clippy::too_many_arguments)]
fn mark_path(
    mate: &[Option<usize>],
    base: &[usize],
    parent: &mut [Option<usize>],
    in_blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        let m = mate[v].expect("blossom vertex is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("tree vertex");
    }
}

fn augment_from(g: &Graph, mate: &[Option<usize>], root: usize) -> Option<AugPath> {
    let n = g.order();
    let mut used = vec![false; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                let cur = lca(mate, &base, &parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(mate, &base, &mut parent, &mut in_blossom, v, cur, to);
                mark_path(mate, &base, &mut parent, &mut in_blossom, to, cur, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => return Some(AugPath { parent, end: to }),
                    Some(m) => {
                        used[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    None
}

fn apply(mate: &mut [Option<usize>], path: AugPath) {
    let mut v = Some(path.end);
    while let Some(x) = v {
        let pv = path.parent[x].expect("path vertex has a parent");
        let next = mate[pv];
        mate[x] = Some(pv);
        mate[pv] = Some(x);
        v = next;
    }
}

/// Which of the three configurations a matching edge `e = {u, v}` is in,
/// judged by `N(u) ∩ M̄` and `N(v) ∩ M̄`:
/// 1 both empty, 2 exactly one nonempty, 3 both the same single vertex.
/// Anything else exposes an augmenting path and is reported as [`Error::NotMaximum`].
pub fn edge_case(g: &Graph, m: &Matching, e: (usize, usize)) -> Result<u8> {
    if !m.contains(e) {
        return Err(Error::BadParams(format!("{{{}, {}}} is not a matching edge", e.0, e.1)));
    }
    let nu = g.neighbors(e.0) & m.mbar;
    let nv = g.neighbors(e.1) & m.mbar;
    match (nu.is_empty(), nv.is_empty()) {
        (true, true) => Ok(1),
        (true, false) | (false, true) => Ok(2),
        (false, false) if nu == nv && nu.len() == 1 => Ok(3),
        _ => Err(Error::NotMaximum),
    }
}

fn check_maximum(g: &Graph, m: &Matching) -> Result<()> {
    if m.len() != maximum_matching(g).len() {
        Err(Error::NotMaximum)
    } else {
        Ok(())
    }
}

/// Rewires a maximum matching of a twin-free graph until `U_M` is empty: the
/// smallest `x ∈ U_M` takes over the matching edge containing `N(x)`, paired
/// with its smaller neighbour on that edge.
pub fn eliminate_um(g: &Graph, m: &Matching) -> Result<Matching> {
    if !is_twin_free(g) {
        return Err(Error::NotTwinFree);
    }
    check_maximum(g, m)?;
    let mut m = m.clone();
    let mut u = m.u_set(g);
    while let Some(x) = u.min() {
        let nx = g.neighbors(x);
        let idx = m
            .edges
            .iter()
            .position(|&(a, b)| nx.is_subset(VertexSet::singleton(a).with(b)))
            .expect("x is in U_M");
        let partner = nx.min().expect("connected graphs have no isolated vertex");
        let mut edges = m.edges.clone();
        edges[idx] = (partner, x);
        let next = Matching::new(g, &edges)?;
        let next_u = next.u_set(g);
        assert_eq!(next_u, u.without(x), "rewiring removes exactly x from U_M");
        m = next;
        u = next_u;
    }
    Ok(m)
}

/// A partition `V1 ∪ V2 ∪ M̄` from a maximum matching with `U_M` empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedPartition {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub matching: Matching,
}

/// `V1` takes, from each matching edge, the endpoint with unmatched
/// neighbours (the smaller endpoint when both or neither have one). For
/// twin-free, `C4`-free, connected graphs of order at least 4 it is a
/// locating-dominating set of size `alpha'(G)`.
pub fn v1_construction(g: &Graph) -> Result<MatchedPartition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_twin_free(g) {
        return Err(Error::NotTwinFree);
    }
    if !g.is_c4_free() {
        return Err(Error::HasC4);
    }
    if g.order() < 4 {
        return Err(Error::BadParams(format!("order must be at least 4, got {}", g.order())));
    }
    let m = eliminate_um(g, &maximum_matching(g))?;
    let mut v1 = VertexSet::EMPTY;
    let mut v2 = VertexSet::EMPTY;
    for &(u, v) in &m.edges {
        let (first, second) = match edge_case(g, &m, (u, v))? {
            2 if (g.neighbors(u) & m.mbar).is_empty() => (v, u),
            _ => (u, v),
        };
        v1.insert(first);
        v2.insert(second);
    }
    Ok(MatchedPartition { v1, v2, matching: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_locating_dominating;

    fn brute(g: &Graph, free: VertexSet) -> usize {
        let Some(v) = free.min() else { return 0 };
        let rest = free.without(v);
        let mut best = brute(g, rest);
        for w in g.neighbors(v) & rest {
            best = best.max(1 + brute(g, rest.without(w)));
        }
        best
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn small_matchings() {
        assert_eq!(maximum_matching(&path(4)).len(), 2);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(maximum_matching(&c5).len(), 2);
        let petersen = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let m = maximum_matching(&petersen);
        assert_eq!(m.len(), 5);
        assert!(m.mbar.is_empty());
        assert_eq!(brute(&petersen, petersen.vertices()), 5);
    }

    #[test]
    fn blossom_needed() {
        // triangle with tails: greedy augmenting from 0 must shrink the odd cycle
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (2, 4), (3, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), brute(&g, g.vertices()));
    }

    #[test]
    fn cases() {
        let k4 = Graph::complete(4).unwrap();
        let m = maximum_matching(&k4);
        for &e in &m.edges {
            assert_eq!(edge_case(&k4, &m, e).unwrap(), 1);
        }
        let p3 = path(3);
        let m = Matching::new(&p3, &[(0, 1)]).unwrap();
        assert_eq!(edge_case(&p3, &m, (0, 1)).unwrap(), 2);
        let k3 = Graph::complete(3).unwrap();
        let m = Matching::new(&k3, &[(0, 1)]).unwrap();
        assert_eq!(edge_case(&k3, &m, (0, 1)).unwrap(), 3);
        let p4 = path(4);
        let m = Matching::new(&p4, &[(1, 2)]).unwrap();
        assert_eq!(edge_case(&p4, &m, (1, 2)), Err(Error::NotMaximum));
        assert_eq!(eliminate_um(&p4, &m), Err(Error::NotMaximum));
    }

    #[test]
    fn elimination_and_v1() {
        // P5 matched {0,1},{2,3}: vertex 4 hangs off edge {2,3}
        let p5 = path(5);
        let m = Matching::new(&p5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(m.u_set(&p5), VertexSet::singleton(4));
        let m2 = eliminate_um(&p5, &m).unwrap();
        assert!(m2.u_set(&p5).is_empty());
        assert_eq!(m2.len(), 2);

        let p4 = path(4);
        let mp = v1_construction(&p4).unwrap();
        assert_eq!(mp.v1.len(), 2);
        assert!(is_locating_dominating(&p4, mp.v1));

        let g6 = crate::families::gen(crate::families::FamilySpec::G { r: 6 }).unwrap();
        let mp = v1_construction(&g6).unwrap();
        assert_eq!(mp.v1.len(), 7);
        assert!(is_locating_dominating(&g6, mp.v1));
        for x in mp.matching.mbar {
            assert!((g6.neighbors(x) & mp.v1).len() >= 2);
        }
    }

    #[test]
    fn v1_preconditions() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(v1_construction(&c4), Err(Error::NotTwinFree));
        let c6_chord = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (3, 5), (1, 4)]).unwrap();
        assert!(matches!(v1_construction(&c6_chord), Err(Error::HasC4) | Err(Error::NotTwinFree)));
        assert_eq!(v1_construction(&Graph::empty(4).unwrap()), Err(Error::Disconnected));
    }
}
