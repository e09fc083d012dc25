use crate::budget::{caps, Budget, InvariantResult, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::{is_twin_free, twin_decomposition};
use crate::vertex_set::{Combinations, VertexSet};

use super::predicates::{
    is_dominating, is_k_dominating, is_locating_dominating, is_minimal_dominating, Resolver,
};

/// Smallest `S ⊇ forced` with `pred(S)`, trying sizes `k_start..=k_max` and
/// within each size the `(S \ forced)` subsets of `pool` in colex order.
fn min_superset_search(
    forced: VertexSet,
    pool: VertexSet,
    k_start: usize,
    k_max: usize,
    budget: &mut Budget,
    mut pred: impl FnMut(VertexSet) -> bool,
) -> Result<Option<VertexSet>> {
    let base = forced.len();
    for k in k_start.max(base)..=k_max {
        for extra in Combinations::new(pool, k - base) {
            budget.tick()?;
            let s = forced | extra;
            if pred(s) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Exact metric dimension by subset search.
///
/// A resolving set contains all but at most one vertex of every twin class,
/// and swapping twins is an automorphism, so the search is restricted to
/// supersets of `Omega_G`. The witness is the colex-first such set.
pub fn metric_dimension(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::SUBSET_SEARCH)?;
    let resolver = Resolver::new(g)?;
    let td = twin_decomposition(g);
    let start = if g.order() > 1 { 1 } else { 0 };
    let mut budget = cfg.budget();
    let s = min_superset_search(td.omega, g.vertices() - td.omega, start, g.order(), &mut budget, |s| {
        resolver.is_resolving(s)
    })?
    .expect("V(G) resolves G");
    Ok(InvariantResult::search(s))
}

/// Exact locating-domination number, with the same twin-class forcing as
/// [`metric_dimension`].
pub fn location_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::SUBSET_SEARCH)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let td = twin_decomposition(g);
    let n = g.order();
    // |D| codes must cover n - |D| outside vertices with distinct nonempty subsets.
    let counting = (1..=n).find(|&k| k >= 64 || (1u64 << k) - 1 + k as u64 >= n as u64).unwrap_or(n);
    let mut budget = cfg.budget();
    let s = min_superset_search(td.omega, g.vertices() - td.omega, counting, n, &mut budget, |s| {
        is_locating_dominating(g, s)
    })?
    .expect("V(G) is locating-dominating");
    Ok(InvariantResult::search(s))
}

pub fn domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    k_domination_number(g, 1, cfg)
}

/// Exact `gamma_k`. Vertices of degree below `k` belong to every
/// `k`-dominating set and are forced.
pub fn k_domination_number(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<InvariantResult> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    cfg.check_cap(g, caps::SUBSET_SEARCH)?;
    let forced: VertexSet = (0..g.order()).filter(|&v| g.degree(v) < k).collect();
    let mut budget = cfg.budget();
    let s = min_superset_search(forced, g.vertices() - forced, 1, g.order(), &mut budget, |s| {
        is_k_dominating(g, s, k)
    })?
    .expect("V(G) is k-dominating");
    Ok(InvariantResult::search(s))
}

/// Exact upper domination number: sizes are tried from `n` downwards and the
/// colex-first minimal dominating set of the largest size is returned.
pub fn upper_domination_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::UPPER_DOMINATION)?;
    let mut budget = cfg.budget();
    for k in (1..=g.order()).rev() {
        for s in Combinations::new(g.vertices(), k) {
            budget.tick()?;
            if is_minimal_dominating(g, s) {
                return Ok(InvariantResult::search(s));
            }
        }
    }
    unreachable!("a graph always has a minimal dominating set")
}

/// `V(G) \ d` for a twin-free graph without isolated vertices and a minimal
/// dominating set `d`; the result is always locating-dominating.
pub fn ore_complement_ld(g: &Graph, d: VertexSet) -> Result<VertexSet> {
    if !is_twin_free(g) {
        return Err(Error::NotTwinFree);
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if !d.is_subset(g.vertices()) || !is_minimal_dominating(g, d) {
        return Err(Error::NotMinimalDominating);
    }
    Ok(g.vertices() - d)
}

struct MaxIndependent<'a> {
    g: &'a Graph,
    best: VertexSet,
    budget: Budget,
}

impl MaxIndependent<'_> {
    // Some maximum independent set of G[p] meets N[v] for any v in p, so it
    // suffices to branch on the closed neighbourhood of a minimum-degree vertex.
    fn search(&mut self, chosen: VertexSet, p: VertexSet) -> Result<()> {
        self.budget.tick()?;
        if p.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        if chosen.len() + p.len() <= self.best.len() {
            return Ok(());
        }
        let v = p.iter().min_by_key(|&v| ((self.g.neighbors(v) & p).len(), v)).expect("p nonempty");
        for w in (self.g.neighbors(v) & p).with(v) {
            self.search(chosen.with(w), p - self.g.closed_neighbors(w))?;
        }
        Ok(())
    }
}

pub fn independence_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::BRANCH_AND_BOUND)?;
    let mut s = MaxIndependent { g, best: VertexSet::EMPTY, budget: cfg.budget() };
    s.search(VertexSet::EMPTY, g.vertices())?;
    Ok(InvariantResult::search(s.best))
}

pub fn clique_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    independence_number(&g.complement(), cfg)
}

struct Colorer<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    budget: Budget,
}

const UNCOLORED: usize = usize::MAX;

impl Colorer<'_> {
    fn solve(&mut self, remaining: usize) -> Result<bool> {
        self.budget.tick()?;
        if remaining == 0 {
            return Ok(true);
        }
        // DSATUR: most distinct neighbour colours, then degree, then index.
        let n = self.g.order();
        let mut pick = None;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let mut seen = 0u64;
            for w in self.g.neighbors(v) {
                if self.color[w] != UNCOLORED {
                    seen |= 1 << self.color[w];
                }
            }
            let key = (seen.count_ones() as usize, self.g.degree(v));
            if pick.is_none() || key > pick_key {
                pick = Some((v, seen));
                pick_key = key;
            }
        }
        let (v, seen) = pick.expect("an uncoloured vertex remains");
        let used = self.color.iter().filter(|&&c| c != UNCOLORED).max().map_or(0, |&c| c + 1);
        // Colours beyond the first unused one are interchangeable.
        for c in 0..self.k.min(used + 1) {
            if seen >> c & 1 == 0 {
                self.color[v] = c;
                if self.solve(remaining - 1)? {
                    return Ok(true);
                }
            }
        }
        self.color[v] = UNCOLORED;
        Ok(false)
    }
}

/// Exact chromatic number by iterative deepening from the clique number.
/// `coloring` holds one colour per vertex; `witness` is colour class 0.
pub fn chromatic_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::BRANCH_AND_BOUND)?;
    let n = g.order();
    let omega = clique_number(g, cfg)?.value;
    for k in omega.max(1)..=n {
        let mut c = Colorer { g, k, color: vec![UNCOLORED; n], budget: cfg.budget() };
        if c.solve(n)? {
            let witness = (0..n).filter(|&v| c.color[v] == 0).collect();
            return Ok(InvariantResult {
                value: k,
                witness,
                method: crate::budget::Method::SubsetSearch,
                coloring: Some(c.color),
            });
        }
    }
    unreachable!("n colours always suffice")
}

/// Dominating-set helper re-exported for corpus sweeps: every minimal
/// dominating set of `g`, in colex order within increasing size.
pub fn minimal_dominating_sets(g: &Graph, cfg: &SolverConfig) -> Result<Vec<VertexSet>> {
    cfg.check_cap(g, caps::UPPER_DOMINATION)?;
    let mut budget = cfg.budget();
    let mut out = Vec::new();
    for k in 1..=g.order() {
        for s in Combinations::new(g.vertices(), k) {
            budget.tick()?;
            if is_dominating(g, s) && is_minimal_dominating(g, s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::predicates::{is_clique, is_independent};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }
    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn paths_have_dimension_one() {
        // the ends of P3 are twins, so the forced set is {2}
        assert_eq!(metric_dimension(&path(3), &cfg()).unwrap().witness, VertexSet::singleton(2));
        for n in 4..10 {
            let r = metric_dimension(&path(n), &cfg()).unwrap();
            assert_eq!(r.value, 1);
            assert_eq!(r.witness, VertexSet::singleton(0));
        }
        assert_eq!(metric_dimension(&Graph::empty(1).unwrap(), &cfg()).unwrap().value, 0);
    }

    #[test]
    fn complete_graphs() {
        for n in 2..7 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(metric_dimension(&k, &cfg()).unwrap().value, n - 1);
            assert_eq!(location_domination_number(&k, &cfg()).unwrap().value, n - 1);
            assert_eq!(domination_number(&k, &cfg()).unwrap().value, 1);
            assert_eq!(upper_domination_number(&k, &cfg()).unwrap().value, 1);
            assert_eq!(independence_number(&k, &cfg()).unwrap().value, 1);
            assert_eq!(clique_number(&k, &cfg()).unwrap().value, n);
            assert_eq!(chromatic_number(&k, &cfg()).unwrap().value, n);
        }
    }

    #[test]
    fn small_cycles_and_stars() {
        let c4 = cycle(4);
        assert_eq!(k_domination_number(&c4, 2, &cfg()).unwrap().value, 2);
        assert_eq!(upper_domination_number(&c4, &cfg()).unwrap().value, 2);
        let c5 = cycle(5);
        assert_eq!(independence_number(&c5, &cfg()).unwrap().value, 2);
        let chi = chromatic_number(&c5, &cfg()).unwrap();
        assert_eq!(chi.value, 3);
        let col = chi.coloring.unwrap();
        assert!(c5.edges().all(|(u, v)| col[u] != col[v]));
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(upper_domination_number(&star, &cfg()).unwrap().witness, VertexSet::from_iter([1usize, 2, 3, 4]));
    }

    #[test]
    fn witnesses_satisfy_predicates() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5), (0, 3)]).unwrap();
        let a = independence_number(&g, &cfg()).unwrap();
        assert!(is_independent(&g, a.witness));
        let w = clique_number(&g, &cfg()).unwrap();
        assert!(is_clique(&g, w.witness));
        let l = location_domination_number(&g, &cfg()).unwrap();
        assert!(is_locating_dominating(&g, l.witness));
        let d = metric_dimension(&g, &cfg()).unwrap();
        assert!(Resolver::new(&g).unwrap().is_resolving(d.witness));
    }

    #[test]
    fn errors() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(metric_dimension(&two, &cfg()), Err(Error::Disconnected));
        assert_eq!(location_domination_number(&two, &cfg()), Err(Error::Disconnected));
        assert_eq!(
            metric_dimension(&path(30), &cfg()),
            Err(Error::CapExceeded { n: 30, cap: caps::SUBSET_SEARCH })
        );
        assert!(metric_dimension(&path(30), &SolverConfig::with_cap(30)).is_ok());
        let p4 = path(4);
        assert_eq!(ore_complement_ld(&p4, VertexSet::from_iter([1usize, 2])).unwrap(), VertexSet::from_iter([0usize, 3]));
        assert_eq!(ore_complement_ld(&p4, VertexSet::from_iter([0usize, 1, 2])), Err(Error::NotMinimalDominating));
        assert_eq!(ore_complement_ld(&cycle(4), VertexSet::from_iter([0usize, 1])), Err(Error::NotTwinFree));
    }

    #[test]
    fn timeout_is_reported() {
        let g = cycle(24);
        let cfg = SolverConfig { cap: None, time_budget: Some(std::time::Duration::ZERO) };
        assert_eq!(upper_domination_number(&g, &SolverConfig { cap: Some(24), ..cfg }), Err(Error::Timeout));
    }
}
