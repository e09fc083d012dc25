//! The greedy `A/B/C` partition of a twin-free graph and the distinguishing,
//! determining and locating-dominating sets read off from it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{complete_to_ld, distinguishes};
use crate::twins::is_twin_free;
use crate::vertex_set::VertexSet;

/// Classes of `~_D`: members of `d` are singletons, the other vertices are
/// grouped by their neighbourhood in `d`. Ordered by minimum vertex.
pub fn classes_under(g: &Graph, d: VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut codes: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        if d.contains(v) {
            classes.push(VertexSet::singleton(v));
            codes.push(VertexSet::EMPTY);
            continue;
        }
        let code = g.neighbors(v) & d;
        match (0..classes.len()).find(|&i| !d.contains(classes[i].min().expect("class")) && codes[i] == code) {
            Some(i) => classes[i].insert(v),
            None => {
                classes.push(VertexSet::singleton(v));
                codes.push(code);
            }
        }
    }
    classes
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreedyPartition {
    pub a: VertexSet,
    /// Vertices outside `a` alone in their `~_A` class.
    pub b: VertexSet,
    /// Vertices outside `a` in classes of size at least two.
    pub c: VertexSet,
    /// Members of `a` in insertion order, starting with `u0`.
    pub a_order: Vec<usize>,
    pub u0: usize,
}

fn split(g: &Graph, a: VertexSet) -> (VertexSet, VertexSet) {
    let mut b = VertexSet::EMPTY;
    let mut c = VertexSet::EMPTY;
    for class in classes_under(g, a) {
        if class.is_subset(a) {
            continue;
        }
        if class.len() == 1 {
            b |= class;
        } else {
            c |= class;
        }
    }
    (b, c)
}

/// Lexicographically smallest `(u, x, y)` with `u, x, y` distinct members of
/// `c`, `x < y`, `x ~_A y`, and `u` separating `x` from `y`.
fn next_triple(g: &Graph, a: VertexSet, c: VertexSet) -> Option<(usize, usize, usize)> {
    for u in c {
        let rest = c.without(u);
        for x in rest {
            let code = g.neighbors(x) & a;
            for y in rest - VertexSet::full(x + 1) {
                if g.neighbors(y) & a == code && distinguishes(g, u, x, y) {
                    return Some((u, x, y));
                }
            }
        }
    }
    None
}

/// Runs the greedy partition from seed `u0`.
pub fn greedy_partition(g: &Graph, u0: usize) -> Result<GreedyPartition> {
    g.check_vertex(u0)?;
    if !is_twin_free(g) {
        return Err(Error::NotTwinFree);
    }
    let mut a = VertexSet::singleton(u0);
    let mut a_order = vec![u0];
    let (mut b, mut c) = split(g, a);
    while let Some((u, _, _)) = next_triple(g, a, c) {
        a.insert(u);
        a_order.push(u);
        (b, c) = split(g, a);
        assert!(a_order.len() <= g.order(), "every step splits a class");
    }
    Ok(GreedyPartition { a, b, c, a_order, u0 })
}

impl GreedyPartition {
    /// `A ∪ B`, `A ∪ C`, `B ∪ C`.
    pub fn distinguishing_sets(&self) -> [VertexSet; 3] {
        [self.a | self.b, self.a | self.c, self.b | self.c]
    }

    /// `A` and `B ∪ C`.
    pub fn determining_sets(&self) -> [VertexSet; 2] {
        [self.a, self.b | self.c]
    }

    /// The smallest distinguishing union (first on ties), made dominating.
    pub fn ld_set(&self, g: &Graph) -> Result<VertexSet> {
        let d = *self.distinguishing_sets().iter().min_by_key(|s| s.len()).expect("three sets");
        complete_to_ld(g, d)
    }
}

/// Smallest of `A` and `B ∪ C` (`A` on ties).
pub fn greedy_determining_set(gp: &GreedyPartition) -> VertexSet {
    let [a, bc] = gp.determining_sets();
    if bc.len() < a.len() {
        bc
    } else {
        a
    }
}

/// One partition per seed vertex.
pub fn run_all_seeds(g: &Graph) -> Result<Vec<GreedyPartition>> {
    (0..g.order()).map(|u0| greedy_partition(g, u0)).collect()
}
