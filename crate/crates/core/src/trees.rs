//! Leg structure of trees and the closed formulas built on it.

use serde::Serialize;

use crate::budget::{InvariantResult, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A major vertex (degree at least 3) together with its terminal legs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExteriorMajor {
    pub vertex: usize,
    /// `(leaf, length)` for each leaf whose nearest major vertex is `vertex`,
    /// sorted by leaf.
    pub legs: Vec<(usize, usize)>,
    /// Number of terminal legs.
    pub ter: usize,
    /// Number of distinct leg lengths.
    pub ter_prime: usize,
    /// `vertex` plus every vertex on its legs.
    pub n_u: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeAnalysis {
    pub n: usize,
    pub is_path: bool,
    /// Exterior major vertices in increasing order.
    pub exterior_major: Vec<ExteriorMajor>,
}

pub fn analyze_tree(g: &Graph) -> Result<TreeAnalysis> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.order();
    let mut by_major: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut is_path = true;
    for leaf in (0..n).filter(|&v| g.degree(v) == 1) {
        let (mut prev, mut cur, mut len) = (leaf, g.neighbors(leaf).min().expect("leaf has a neighbour"), 1);
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).without(prev).min().expect("degree two");
            prev = cur;
            cur = next;
            len += 1;
        }
        if g.degree(cur) >= 3 {
            is_path = false;
            by_major[cur].push((leaf, len));
        }
    }
    let exterior_major = by_major
        .into_iter()
        .enumerate()
        .filter(|(_, legs)| !legs.is_empty())
        .map(|(vertex, legs)| {
            let mut lengths: Vec<usize> = legs.iter().map(|&(_, l)| l).collect();
            let n_u = 1 + lengths.iter().sum::<usize>();
            lengths.sort_unstable();
            lengths.dedup();
            ExteriorMajor { vertex, ter: legs.len(), ter_prime: lengths.len(), n_u, legs }
        })
        .collect();
    Ok(TreeAnalysis { n, is_path, exterior_major })
}

/// Metric dimension of a tree from its legs: one less than the terminal
/// degree, summed over exterior major vertices; paths have dimension 1.
///
/// The witness keeps the leaves of every leg but the first at each exterior
/// major vertex.
pub fn tree_metric_dimension(g: &Graph) -> Result<InvariantResult> {
    let ta = analyze_tree(g)?;
    let witness = if ta.n == 1 {
        VertexSet::EMPTY
    } else if ta.is_path {
        VertexSet::singleton((0..ta.n).find(|&v| g.degree(v) == 1).expect("a path has an end"))
    } else {
        ta.exterior_major.iter().flat_map(|m| m.legs[1..].iter().map(|&(leaf, _)| leaf)).collect()
    };
    Ok(InvariantResult { value: witness.len(), witness, method: Method::Formula, coloring: None })
}

/// `sum (ter(u) - ter'(u))` over exterior major vertices, a lower bound on the
/// determining number (0 for paths).
pub fn tree_det_lower_bound(g: &Graph) -> Result<usize> {
    Ok(analyze_tree(g)?.exterior_major.iter().map(|m| m.ter - m.ter_prime).sum())
}

/// `ter'(u) <= 2 n_u / 7 + 1` at every exterior major vertex.
pub fn terprime_bound_check(g: &Graph) -> Result<bool> {
    Ok(analyze_tree(g)?.exterior_major.iter().all(|m| 7 * m.ter_prime <= 2 * m.n_u + 7))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider(legs: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, &edges).unwrap()
    }

    #[test]
    fn star() {
        let s = spider(&[1, 1, 1, 1]);
        let ta = analyze_tree(&s).unwrap();
        assert_eq!(ta.exterior_major.len(), 1);
        let m = &ta.exterior_major[0];
        assert_eq!((m.vertex, m.ter, m.ter_prime, m.n_u), (0, 4, 1, 5));
        assert_eq!(tree_metric_dimension(&s).unwrap().value, 3);
        assert_eq!(tree_det_lower_bound(&s).unwrap(), 3);
        assert!(terprime_bound_check(&s).unwrap());
    }

    #[test]
    fn spiders() {
        let s = spider(&[1, 1, 2]);
        let m = &analyze_tree(&s).unwrap().exterior_major[0];
        assert_eq!((m.ter, m.ter_prime), (3, 2));
        assert_eq!(tree_det_lower_bound(&s).unwrap(), 1);
        let s = spider(&[1, 2, 3]);
        let m = &analyze_tree(&s).unwrap().exterior_major[0];
        assert_eq!((m.ter_prime, m.n_u), (3, 7));
        assert!(terprime_bound_check(&s).unwrap());
    }

    #[test]
    fn paths() {
        let e: Vec<_> = (1..10).map(|i| (i - 1, i)).collect();
        let p = Graph::new(10, &e).unwrap();
        let ta = analyze_tree(&p).unwrap();
        assert!(ta.is_path && ta.exterior_major.is_empty());
        assert_eq!(tree_metric_dimension(&p).unwrap().value, 1);
        assert_eq!(tree_metric_dimension(&Graph::empty(1).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn interior_major_vertices_are_skipped() {
        // two claws joined through a major vertex that owns no leg
        let g = Graph::new(10, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]).unwrap();
        let ta = analyze_tree(&g).unwrap();
        assert_eq!(ta.exterior_major.iter().map(|m| m.vertex).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(tree_metric_dimension(&g).unwrap().value, 3);
    }

    #[test]
    fn rejects_non_trees() {
        let c = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(analyze_tree(&c), Err(Error::NotATree));
    }
}
