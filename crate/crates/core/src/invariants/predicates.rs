use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

/// `u` resolves `{x, y}` when `d(u, x) != d(u, y)`.
pub fn resolves(dist: &DistanceMatrix, u: usize, x: usize, y: usize) -> bool {
    dist.get(u, x) != dist.get(u, y)
}

/// Resolving-set test with the distance layers of every vertex precomputed.
pub struct Resolver {
    n: usize,
    layers: Vec<Vec<VertexSet>>,
}

impl Resolver {
    /// Fails with [`Error::Disconnected`] on disconnected graphs.
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let dist = g.distances();
        let layers = (0..g.order()).map(|u| dist.layers(u)).collect();
        Ok(Resolver { n: g.order(), layers })
    }

    /// Every vertex has a distinct distance vector to `s`.
    pub fn is_resolving(&self, s: VertexSet) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut classes: Vec<VertexSet> = Vec::with_capacity(self.n);
        let mut next: Vec<VertexSet> = Vec::with_capacity(self.n);
        classes.push(VertexSet::full(self.n));
        for u in s {
            next.clear();
            for &c in &classes {
                if c.len() == 1 {
                    continue;
                }
                for &layer in &self.layers[u] {
                    let part = c & layer;
                    if part.len() > 1 {
                        next.push(part);
                    }
                }
            }
            std::mem::swap(&mut classes, &mut next);
            if classes.is_empty() {
                return true;
            }
        }
        classes.iter().all(|c| c.len() <= 1)
    }
}

pub fn is_resolving(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(Resolver::new(g)?.is_resolving(s))
}

/// `u` distinguishes `{x, y}` if it is one of them or adjacent to exactly one.
pub fn distinguishes(g: &Graph, u: usize, x: usize, y: usize) -> bool {
    u == x || u == y || g.has_edge(u, x) != g.has_edge(u, y)
}

/// Codes `N(x) ∩ d` of the vertices outside `d`, sorted.
fn outside_codes(g: &Graph, d: VertexSet) -> Vec<u64> {
    let mut codes: Vec<u64> = (g.vertices() - d).iter().map(|x| (g.neighbors(x) & d).bits()).collect();
    codes.sort_unstable();
    codes
}

fn all_distinct(sorted: &[u64]) -> bool {
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Every pair of vertices is distinguished by some member of `d`.
pub fn is_distinguishing(g: &Graph, d: VertexSet) -> bool {
    all_distinct(&outside_codes(g, d))
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    is_k_dominating(g, d, 1)
}

/// Every vertex outside `d` has at least `k` neighbours in `d`.
pub fn is_k_dominating(g: &Graph, d: VertexSet, k: usize) -> bool {
    (g.vertices() - d).iter().all(|x| (g.neighbors(x) & d).len() >= k)
}

/// Distinguishing and dominating.
pub fn is_locating_dominating(g: &Graph, d: VertexSet) -> bool {
    let codes = outside_codes(g, d);
    codes.first().is_none_or(|&c| c != 0) && all_distinct(&codes)
}

/// No proper subset of `d` is dominating (and `d` itself is).
pub fn is_minimal_dominating(g: &Graph, d: VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|v| !is_dominating(g, d.without(v)))
}

/// No proper subset of `d` is locating-dominating (and `d` itself is).
/// Supersets of locating-dominating sets are locating-dominating, so checking
/// single-vertex removals suffices.
pub fn is_minimal_locating_dominating(g: &Graph, d: VertexSet) -> bool {
    is_locating_dominating(g, d) && d.iter().all(|v| !is_locating_dominating(g, d.without(v)))
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(g.neighbors(v)))
}

/// Turns a distinguishing set into a locating-dominating one by adding the
/// (at most one) undominated outside vertex.
pub fn complete_to_ld(g: &Graph, d: VertexSet) -> Result<VertexSet> {
    if !is_distinguishing(g, d) {
        return Err(Error::NotDistinguishing);
    }
    let undominated = (g.vertices() - d).iter().find(|&x| !g.neighbors(x).intersects(d));
    Ok(match undominated {
        Some(x) => d.with(x),
        None => d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }
    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn resolving_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = p4.distances();
        assert!(resolves(&d, 0, 1, 2));
        assert!(resolves(&d, 1, 1, 2));
        assert!(is_resolving(&p4, set(&[0])).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(!is_resolving(&k4, set(&[0, 1])).unwrap());
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!resolves(&c4.distances(), 0, 1, 3));
        assert!(is_resolving(&c4, set(&[0, 1])).unwrap());
        assert_eq!(is_resolving(&g(2, &[]), set(&[0])), Err(Error::Disconnected));
    }

    #[test]
    fn distinguishing_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(distinguishes(&p4, 0, 0, 3));
        assert!(distinguishes(&p4, 0, 1, 3));
        assert!(!distinguishes(&p4, 1, 0, 2));
        assert!(is_distinguishing(&Graph::complete(2).unwrap(), set(&[0])));
        // twins 1,2 of the path 0-{1,2}-3 are never separated from outside
        let t = g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!is_distinguishing(&t, set(&[0, 3])));
        assert!(is_distinguishing(&p4, set(&[1, 2])));
    }

    #[test]
    fn domination_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k_dominating(&k4, set(&[0]), 1));
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!is_k_dominating(&c4, set(&[0, 1]), 2));
        assert!(is_k_dominating(&c4, set(&[0, 2]), 2));
    }

    #[test]
    fn locating_domination_examples() {
        for n in 2..7 {
            let kn = Graph::complete(n).unwrap();
            assert!(is_locating_dominating(&kn, VertexSet::full(n - 1)));
        }
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!is_locating_dominating(&p4, set(&[0])));
        assert!(is_locating_dominating(&p4, set(&[0, 3])));
    }

    #[test]
    fn completion() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(complete_to_ld(&p3, set(&[2])).unwrap(), set(&[0, 2]));
        assert_eq!(complete_to_ld(&p3, set(&[1, 2])).unwrap(), set(&[1, 2]));
        assert_eq!(complete_to_ld(&p3, set(&[1])), Err(Error::NotDistinguishing));
    }
}
