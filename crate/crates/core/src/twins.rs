//! Twin classes, the twin (quotient) graph `G*`, the set `Omega_G`, and the
//! twin-free companion graph `G~` built from `G*` by adding pendants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::is_locating_dominating;
use crate::vertex_set::VertexSet;

/// `u` and `v` are twins when `N(u) = N(v)` or `N[u] = N[v]`, i.e. no third
/// vertex sees exactly one of them.
#[inline]
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    u != v && g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

/// Some twin pair `(u, v)`, `u < v`, with neither endpoint in `avoid`.
pub fn twin_pair_outside(g: &Graph, avoid: VertexSet) -> Option<(usize, usize)> {
    let free = g.vertices() - avoid;
    for u in free {
        for v in free - VertexSet::full(u + 1) {
            if are_twins(g, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassType {
    /// A singleton class.
    One,
    /// At least two vertices inducing a clique (closed twins).
    K,
    /// At least two vertices inducing an independent set (open twins).
    N,
}

impl ClassType {
    pub fn is_kn(self) -> bool {
        self != ClassType::One
    }
}

/// Partition of `V(G)` into twin classes plus the quotient graph.
#[derive(Clone, Debug)]
pub struct TwinDecomposition {
    /// Classes ordered by their representative.
    pub classes: Vec<VertexSet>,
    pub class_type: Vec<ClassType>,
    /// Minimum vertex of each class.
    pub representative: Vec<usize>,
    /// Index of the class containing each vertex.
    pub class_of: Vec<usize>,
    /// `G*`: one vertex per class, adjacent when representatives are.
    pub star: Graph,
    /// All vertices except the representatives of the non-singleton classes.
    pub omega: VertexSet,
}

impl TwinDecomposition {
    /// Order of `G*`.
    pub fn r(&self) -> usize {
        self.classes.len()
    }

    /// `G*` is exactly `K2`.
    pub fn star_is_k2(&self) -> bool {
        self.r() == 2 && self.star.has_edge(0, 1)
    }

    /// Rebuilds `G*` from an arbitrary choice of one representative per class.
    pub fn star_with_representatives(&self, g: &Graph, reps: &[usize]) -> Graph {
        assert_eq!(reps.len(), self.r());
        let r = self.r();
        let mut edges = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                if g.has_edge(reps[i], reps[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(r, &edges).expect("quotient edges are in range")
    }
}

pub fn twin_decomposition(g: &Graph) -> TwinDecomposition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    let mut class_type = Vec::new();
    let mut representative = Vec::new();
    let mut omega = VertexSet::EMPTY;
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut class = VertexSet::singleton(v);
        for w in v + 1..n {
            if class_of[w] == usize::MAX && are_twins(g, v, w) {
                class.insert(w);
            }
        }
        for w in class {
            class_of[w] = idx;
        }
        let ty = if class.len() == 1 {
            ClassType::One
        } else {
            let other = class.without(v).min().expect("class has two members");
            if g.has_edge(v, other) {
                ClassType::K
            } else {
                ClassType::N
            }
        };
        omega |= class.without(v);
        classes.push(class);
        class_type.push(ty);
        representative.push(v);
    }
    let r = classes.len();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if g.has_edge(representative[i], representative[j]) {
                edges.push((i, j));
            }
        }
    }
    let star = Graph::new(r, &edges).expect("quotient edges are in range");
    TwinDecomposition { classes, class_type, representative, class_of, star, omega }
}

pub fn is_twin_free(g: &Graph) -> bool {
    twin_pair_outside(g, VertexSet::EMPTY).is_none()
}

/// `G~`: `G*` plus one pendant on every non-singleton class that still has a
/// twin inside `G*`.
#[derive(Clone, Debug)]
pub struct TildeGraph {
    pub graph: Graph,
    /// The copies of `V(G*)`, numbered `0..r`.
    pub vstar: VertexSet,
    /// Pendant vertices, numbered from `r` in order of their attachment vertex.
    pub pendants: VertexSet,
    /// `(pendant, attachment)` pairs.
    pub attach: Vec<(usize, usize)>,
}

impl TildeGraph {
    /// The `G*` vertex a pendant hangs from.
    pub fn attachment(&self, pendant: usize) -> Option<usize> {
        self.attach.iter().find(|(p, _)| *p == pendant).map(|&(_, a)| a)
    }
}

/// Builds `G~` for a connected graph whose twin graph is not `K2`.
pub fn build_tilde(g: &Graph, td: &TwinDecomposition) -> Result<TildeGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if td.star_is_k2() {
        return Err(Error::StarIsK2);
    }
    let r = td.r();
    let star = &td.star;
    let mut graph = star.clone();
    let mut attach = Vec::new();
    for i in 0..r {
        if td.class_type[i].is_kn() && (0..r).any(|j| are_twins(star, i, j)) {
            let p = graph.order();
            graph = graph.add_vertex(VertexSet::singleton(i), None)?;
            attach.push((p, i));
        }
    }
    let n_tilde = graph.order();
    let tg = TildeGraph {
        graph,
        vstar: VertexSet::full(r),
        pendants: VertexSet::full(n_tilde) - VertexSet::full(r),
        attach,
    };
    debug_assert!(n_tilde <= g.order());
    debug_assert!(is_twin_free(&tg.graph));
    Ok(tg)
}

/// Maps a locating-dominating set of `G~` to one of `G`: each `G~` vertex goes
/// to the representative of its class (pendants to their attachment's), and
/// `Omega_G` is added.
pub fn lift_ld_set(
    g: &Graph,
    td: &TwinDecomposition,
    tg: &TildeGraph,
    s: VertexSet,
) -> Result<VertexSet> {
    if !s.is_subset(tg.graph.vertices()) || !is_locating_dominating(&tg.graph, s) {
        return Err(Error::NotLocatingDominating);
    }
    let r = td.r();
    let mut out = td.omega;
    for x in s {
        let class = if x < r {
            x
        } else {
            tg.attachment(x).expect("every vertex beyond r is a pendant")
        };
        out.insert(td.representative[class]);
    }
    debug_assert!(out.len() <= s.len() + g.order() - r);
    Ok(out)
}
