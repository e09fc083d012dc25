//! Seeded random corpora and exhaustive enumeration of small connected graphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::canonical_form;
use crate::twins::is_twin_free;
use crate::vertex_set::VertexSet;

/// Independent generator for instance `index` of a corpus with seed `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Uniform labelled tree decoded from a random Prüfer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Result<Graph> {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        return Graph::new(n.max(1), &edges);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

/// Rejection-samples a connected twin-free `G(n, p)`.
pub fn random_twin_free_connected(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    if n < 4 && n != 1 {
        return Err(Error::BadParams(format!("no connected twin-free graph of order {n}")));
    }
    loop {
        let g = random_graph(rng, n, p)?;
        if g.is_connected() && is_twin_free(&g) {
            return Ok(g);
        }
    }
}

/// A connected twin-free graph without 4-cycles: a random tree plus up to
/// `n / 2` random chords that keep it `C4`-free, resampled until twin-free.
pub fn random_c4_free_twin_free(rng: &mut impl Rng, n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::BadParams(format!("order must be at least 4, got {n}")));
    }
    loop {
        let mut g = random_tree(rng, n)?;
        for _ in 0..n / 2 {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let mut edges: Vec<_> = g.edges().collect();
            edges.push((u, v));
            let h = Graph::new(n, &edges)?;
            if h.is_c4_free() {
                g = h;
            }
        }
        if is_twin_free(&g) {
            return Ok(g);
        }
    }
}

/// Parameters of a seeded random corpus, embedded in reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomCorpus {
    pub kind: RandomKind,
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandomKind {
    /// Connected twin-free `G(n, p)` with `p` cycling through 0.2, 0.5, 0.8.
    TwinFree,
    /// Uniform random trees.
    Tree,
    /// Connected twin-free `C4`-free graphs.
    C4FreeTwinFree,
    /// Connected `G(n, p)`, `p` cycling as for `TwinFree`.
    Connected,
}

pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

impl RandomCorpus {
    /// Instance `i`: order `n_min + i mod (n_max - n_min + 1)`, own RNG stream.
    pub fn instance(&self, i: usize) -> Result<Graph> {
        let span = self.n_max - self.n_min + 1;
        let n = self.n_min + i % span;
        let p = EDGE_PROBABILITIES[(i / span) % EDGE_PROBABILITIES.len()];
        let mut rng = instance_rng(self.seed, i as u64);
        match self.kind {
            RandomKind::TwinFree => random_twin_free_connected(&mut rng, n, p),
            RandomKind::Tree => random_tree(&mut rng, n),
            RandomKind::C4FreeTwinFree => random_c4_free_twin_free(&mut rng, n),
            RandomKind::Connected => loop {
                let g = random_graph(&mut rng, n, p)?;
                if g.is_connected() {
                    return Ok(g);
                }
            },
        }
    }

    pub fn generate(&self) -> Result<Vec<Graph>> {
        if self.n_min > self.n_max {
            return Err(Error::BadParams("n_min exceeds n_max".into()));
        }
        use rayon::prelude::*;
        (0..self.count).into_par_iter().map(|i| self.instance(i)).collect()
    }
}

fn is_connected_without(g: &Graph, u: usize) -> bool {
    let keep = g.vertices().without(u);
    let Some(start) = keep.min() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= g.neighbors(v);
        }
        next &= keep;
        frontier = next - seen;
        seen |= next;
    }
    seen == keep
}

/// Cheap isomorphism invariant used to rank deletion candidates.
fn rank(g: &Graph, v: usize) -> (usize, usize) {
    let nb = g.neighbors(v);
    let degsum = nb.iter().map(|w| g.degree(w)).sum();
    let inner = nb.iter().map(|w| (g.neighbors(w) & nb).len()).sum::<usize>() / 2;
    (degsum, inner)
}

/// Whether the child `g` (whose last vertex was just added) is the canonical
/// extension of its parent: the added vertex must be equivalent to the
/// preferred non-cut vertex of minimum degree.
fn is_canonical_child(g: &Graph) -> bool {
    let n = g.order();
    let v = n - 1;
    let d = g.degree(v);
    for u in 0..v {
        if g.degree(u) < d && is_connected_without(g, u) {
            return false;
        }
    }
    let candidates: Vec<usize> = (0..v).filter(|&u| g.degree(u) == d && is_connected_without(g, u)).collect();
    if candidates.is_empty() {
        return true;
    }
    let rv = rank(g, v);
    let mut tied = vec![v];
    for &u in &candidates {
        let ru = rank(g, u);
        if ru > rv {
            return false;
        }
        if ru == rv {
            tied.push(u);
        }
    }
    if tied.len() == 1 {
        return true;
    }
    let cf = canonical_form(g);
    let best = *tied.iter().max_by_key(|&&u| cf.position[u]).expect("nonempty");
    cf.orbit_of[best] == cf.orbit_of[v]
}

/// `s` is the smallest subset in its orbit under the group generated by `gens`.
fn is_orbit_minimum(s: VertexSet, gens: &[Vec<usize>]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let mut seen = HashSet::from([s.bits()]);
    let mut stack = vec![s];
    while let Some(t) = stack.pop() {
        for p in gens {
            let image: VertexSet = t.iter().map(|x| p[x]).collect();
            if image.bits() < s.bits() {
                return false;
            }
            if seen.insert(image.bits()) {
                stack.push(image);
            }
        }
    }
    true
}

fn children(parent: &Graph, trees_only: bool, mut visit: impl FnMut(Graph)) {
    let n = parent.order();
    let gens = canonical_form(parent).generators;
    let sets: Box<dyn Iterator<Item = VertexSet>> = if trees_only {
        Box::new((0..n).map(VertexSet::singleton))
    } else {
        Box::new((1..1u64 << n).map(VertexSet::from_bits))
    };
    for s in sets {
        if !is_orbit_minimum(s, &gens) {
            continue;
        }
        let child = parent.add_vertex(s, None).expect("order stays within range");
        if is_canonical_child(&child) {
            visit(child);
        }
    }
}

/// Calls `visit` once per isomorphism class of connected graphs (or trees)
/// of order `n`, by canonical vertex augmentation. Output order is
/// deterministic.
pub fn for_each_connected(n: usize, trees_only: bool, mut visit: impl FnMut(&Graph)) -> Result<()> {
    if n == 0 || n > 12 {
        return Err(Error::BadParams(format!("exhaustive enumeration supports 1 <= n <= 12, got {n}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n.saturating_sub(1) {
        let mut next = Vec::new();
        for p in &level {
            children(p, trees_only, |c| next.push(c));
        }
        level = next;
    }
    if n == 1 {
        visit(&level[0]);
        return Ok(());
    }
    for p in &level {
        children(p, trees_only, |c| visit(&c));
    }
    Ok(())
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_connected(n, false, |g| out.push(g.clone()))?;
    Ok(out)
}

pub fn trees(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_connected(n, true, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Connected twin-free graphs of order `n`.
pub fn twin_free_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(n)?.into_iter().filter(is_twin_free).collect())
}
