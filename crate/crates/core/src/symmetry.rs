//! Automorphisms by individualisation and refinement: pointwise stabilisers,
//! determining sets, orbits, and a canonical form for isomorphism rejection.

use serde::Serialize;

use crate::budget::{caps, InvariantResult, SolverConfig};
use crate::error::Result;
use crate::graph::Graph;
use crate::twins::{are_twins, twin_decomposition, twin_pair_outside};
use crate::vertex_set::{Combinations, VertexSet};

/// A non-identity automorphism, `perm[v]` being the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismWitness {
    pub perm: Vec<usize>,
}

pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    let n = g.order();
    if perm.len() != n {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &p in perm {
        if p >= n || seen.contains(p) {
            return false;
        }
        seen.insert(p);
    }
    (0..n).all(|u| {
        let image: VertexSet = g.neighbors(u).iter().map(|v| perm[v]).collect();
        image == g.neighbors(perm[u])
    })
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// An ordered partition of the vertex set.
#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }

    /// First non-singleton cell of minimum size.
    fn target(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, c) in self.cells.iter().enumerate() {
            if c.len() > 1 && best.is_none_or(|b| c.len() < self.cells[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    fn individualize(&self, t: usize, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..t]);
        cells.push(VertexSet::singleton(v));
        cells.push(self.cells[t].without(v));
        cells.extend_from_slice(&self.cells[t + 1..]);
        Partition { cells }
    }

    /// Splits cells by neighbour counts into every cell until stable. Sub-cells
    /// are ordered by signature, so the result (and the returned trace) depends
    /// only on the coloured graph up to isomorphism.
    fn refine(&mut self, g: &Graph) -> u64 {
        let n = g.order();
        let mut trace = self.cells.len() as u64;
        let mut sig = vec![0u64; n];
        let mut buf: Vec<(u64, usize)> = Vec::with_capacity(n);
        loop {
            for v in 0..n {
                let nb = g.neighbors(v);
                let mut h = 0u64;
                for c in &self.cells {
                    h = mix(h, (nb & *c).len() as u64);
                }
                sig[v] = h;
            }
            let mut next = Vec::with_capacity(n);
            let mut changed = false;
            for (i, &c) in self.cells.iter().enumerate() {
                if c.len() == 1 {
                    next.push(c);
                    continue;
                }
                buf.clear();
                buf.extend(c.iter().map(|v| (sig[v], v)));
                buf.sort_unstable();
                let mut start = 0;
                for j in 1..=buf.len() {
                    if j == buf.len() || buf[j].0 != buf[start].0 {
                        next.push(buf[start..j].iter().map(|&(_, v)| v).collect());
                        if start > 0 || j < buf.len() {
                            changed = true;
                            trace = mix(trace, mix(i as u64, mix(buf[start].0, (j - start) as u64)));
                        }
                        start = j;
                    }
                }
            }
            self.cells = next;
            if !changed {
                return mix(trace, self.cells.len() as u64);
            }
        }
    }

    fn shape_matches(&self, other: &Partition) -> bool {
        self.cells.len() == other.cells.len()
            && self.cells.iter().zip(&other.cells).all(|(a, b)| a.len() == b.len())
    }
}

/// An isomorphism of `g` onto itself carrying the (refined) left partition to
/// the (refined) right one cell by cell.
fn find_iso(g: &Graph, left: &Partition, right: &Partition) -> Option<Vec<usize>> {
    let n = g.order();
    if left.is_discrete(n) {
        let mut perm = vec![0; n];
        for (a, b) in left.cells.iter().zip(&right.cells) {
            perm[(*a).min().expect("cell")] = (*b).min().expect("cell");
        }
        return is_automorphism(g, &perm).then_some(perm);
    }
    let t = left.target().expect("non-discrete partition has a target");
    let x = left.cells[t].min().expect("cell");
    let mut l = left.individualize(t, x);
    let lt = l.refine(g);
    let mut tried = VertexSet::EMPTY;
    for y in right.cells[t] {
        if tried.iter().any(|z| are_twins(g, y, z)) {
            continue;
        }
        tried.insert(y);
        let mut r = right.individualize(t, y);
        if r.refine(g) != lt || !l.shape_matches(&r) {
            continue;
        }
        if let Some(p) = find_iso(g, &l, &r) {
            return Some(p);
        }
    }
    None
}

fn fixing_partition(g: &Graph, s: VertexSet) -> Partition {
    let mut cells: Vec<VertexSet> = s.iter().map(VertexSet::singleton).collect();
    let rest = g.vertices() - s;
    if !rest.is_empty() {
        cells.push(rest);
    }
    let mut p = Partition { cells };
    p.refine(g);
    p
}

/// Some non-identity automorphism fixing every vertex of `s`, if one exists.
///
/// Walks down the stabiliser chain: if no automorphism moves the first vertex
/// `w0` of the target cell, the stabiliser of `s` equals that of `s + w0`.
pub fn nontrivial_automorphism_fixing(g: &Graph, s: VertexSet) -> Option<AutomorphismWitness> {
    let n = g.order();
    if let Some((u, v)) = twin_pair_outside(g, s) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(u, v);
        return Some(AutomorphismWitness { perm });
    }
    let mut p = fixing_partition(g, s);
    while let Some(t) = p.target() {
        let w0 = p.cells[t].min().expect("cell");
        let mut left = p.individualize(t, w0);
        let lt = left.refine(g);
        for w in p.cells[t].without(w0) {
            let mut right = p.individualize(t, w);
            if right.refine(g) != lt || !left.shape_matches(&right) {
                continue;
            }
            if let Some(perm) = find_iso(g, &left, &right) {
                return Some(AutomorphismWitness { perm });
            }
        }
        p = left;
    }
    None
}

/// The pointwise stabiliser of `s` is trivial.
pub fn is_determining(g: &Graph, s: VertexSet) -> bool {
    nontrivial_automorphism_fixing(g, s).is_none()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
    fn absorb(&mut self, perm: &[usize]) {
        for (v, &w) in perm.iter().enumerate() {
            self.union(v, w);
        }
    }
    fn classes(&mut self) -> Vec<VertexSet> {
        let n = self.0.len();
        let mut by_root = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].insert(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

fn orbits_uncapped(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if are_twins(g, u, v) {
                uf.union(u, v);
            }
        }
    }
    let mut p = Partition { cells: vec![g.vertices()] };
    p.refine(g);
    for (t, &cell) in p.cells.iter().enumerate() {
        if cell.len() == 1 {
            continue;
        }
        let mut reps: Vec<(usize, Partition, u64)> = Vec::new();
        for w in cell {
            let mut pw = p.individualize(t, w);
            let tw = pw.refine(g);
            let mut placed = false;
            for (r, pr, tr) in &reps {
                if uf.find(*r) == uf.find(w) {
                    placed = true;
                    break;
                }
                if *tr == tw && pr.shape_matches(&pw) {
                    if let Some(perm) = find_iso(g, pr, &pw) {
                        uf.absorb(&perm);
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                reps.push((w, pw, tw));
            }
        }
    }
    uf.classes()
}

/// Vertex orbits of `Aut(G)`, ordered by minimum vertex.
pub fn orbits(g: &Graph, cfg: &SolverConfig) -> Result<Vec<VertexSet>> {
    cfg.check_cap(g, caps::BRANCH_AND_BOUND)?;
    Ok(orbits_uncapped(g))
}

/// Exact determining number.
///
/// The search starts at `n - r` with `Omega_G` forced (a determining set misses
/// at most one vertex per twin class, and twin swaps let that be the
/// representative). Vertices fixed by every automorphism never help, so only
/// vertices in non-trivial orbits are added. Rigid graphs are answered
/// before the search cap applies.
pub fn determining_number(g: &Graph, cfg: &SolverConfig) -> Result<InvariantResult> {
    cfg.check_cap(g, caps::BRANCH_AND_BOUND)?;
    let moved: VertexSet = orbits_uncapped(g).into_iter().filter(|o| o.len() > 1).fold(VertexSet::EMPTY, |a, o| a | o);
    if moved.is_empty() {
        return Ok(InvariantResult::search(VertexSet::EMPTY));
    }
    let cap = if g.is_tree() { caps::DETERMINING_TREE } else { caps::DETERMINING };
    cfg.check_cap(g, cap)?;
    let td = twin_decomposition(g);
    let pool = moved - td.omega;
    let mut budget = cfg.budget();
    for extra in 0..=pool.len() {
        for add in Combinations::new(pool, extra) {
            budget.tick()?;
            let s = td.omega | add;
            if is_determining(g, s) {
                return Ok(InvariantResult::search(s));
            }
        }
    }
    unreachable!("fixing every moved vertex leaves only the identity")
}

/// A canonical relabelling: isomorphic graphs get identical `rows`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Adjacency of the relabelled graph.
    pub rows: Vec<u64>,
    /// `position[v]` is the new label of vertex `v`.
    pub position: Vec<usize>,
    /// Orbit representative (minimum vertex) of each vertex.
    pub orbit_of: Vec<usize>,
    /// Non-identity automorphisms generating `Aut(G)`.
    pub generators: Vec<Vec<usize>>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        Graph::from_rows(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<u64>, Vec<usize>)>,
    uf: UnionFind,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn relabel(&self, p: &Partition) -> (Vec<u64>, Vec<usize>) {
        let n = self.g.order();
        let mut pos = vec![0; n];
        for (i, c) in p.cells.iter().enumerate() {
            pos[(*c).min().expect("cell")] = i;
        }
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for v in self.g.neighbors(u) {
                rows[pos[u]] |= 1 << pos[v];
            }
        }
        (rows, pos)
    }

    fn visit(&mut self, p: &Partition, traces: &mut Vec<u64>) {
        let n = self.g.order();
        if let Some((bt, _, _)) = &self.best {
            let k = traces.len().min(bt.len());
            match traces[..k].cmp(&bt[..k]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Equal if traces.len() > bt.len() => return,
                _ => {}
            }
        }
        if p.is_discrete(n) {
            let (rows, pos) = self.relabel(p);
            let cand = (traces.clone(), rows);
            match &self.best {
                Some((bt, br, bpos)) => match (&cand.0, &cand.1).cmp(&(bt, br)) {
                    std::cmp::Ordering::Less => self.best = Some((cand.0, cand.1, pos)),
                    std::cmp::Ordering::Equal => {
                        let mut at = vec![0; n];
                        for v in 0..n {
                            at[bpos[v]] = v;
                        }
                        let perm: Vec<usize> = (0..n).map(|v| at[pos[v]]).collect();
                        self.uf.absorb(&perm);
                        if perm.iter().enumerate().any(|(v, &w)| v != w) {
                            self.generators.push(perm);
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                },
                None => self.best = Some((cand.0, cand.1, pos)),
            }
            return;
        }
        let t = p.target().expect("non-discrete partition has a target");
        let mut tried = VertexSet::EMPTY;
        for y in p.cells[t] {
            if tried.iter().any(|z| are_twins(self.g, y, z)) {
                continue;
            }
            tried.insert(y);
            let mut q = p.individualize(t, y);
            traces.push(q.refine(self.g));
            self.visit(&q, traces);
            traces.pop();
        }
    }
}

/// Canonical form with orbit information, by exhaustive individualisation
/// (twin choices are symmetric and explored once). Intended for small graphs.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    let mut generators = Vec::new();
    for u in 0..n {
        // one transposition per twin class member suffices to generate its symmetric group
        if let Some(v) = (u + 1..n).find(|&v| are_twins(g, u, v)) {
            uf.union(u, v);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(u, v);
            generators.push(perm);
        }
    }
    let mut p = Partition { cells: vec![g.vertices()] };
    let mut traces = vec![p.refine(g)];
    let mut search = CanonSearch { g, best: None, uf, generators };
    search.visit(&p, &mut traces);
    let (_, rows, position) = search.best.take().expect("search reaches a leaf");
    let orbit_of = (0..n).map(|v| search.uf.find(v)).collect();
    CanonicalForm { rows, position, orbit_of, generators: search.generators }
}
