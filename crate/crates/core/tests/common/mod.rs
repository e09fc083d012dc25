//! Brute-force oracles that share nothing with the library beyond `Graph`
//! accessors. Exponential, so keep inputs small.
#![allow(dead_code)]

use std::collections::VecDeque;

use locdom::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn bfs_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let adj = adjacency(g);
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for v in 0..n {
                    if adj[u][v] && d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d: Vec<Vec<Option<u32>>> =
        (0..n).map(|u| (0..n).map(|v| if u == v { Some(0) } else if g.has_edge(u, v) { Some(1) } else { None }).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn resolves(g: &Graph, mask: u64) -> bool {
    let d = bfs_distances(g);
    let n = g.order();
    let s = members(mask, n);
    let mut seen: Vec<Vec<Option<u32>>> = Vec::new();
    for v in 0..n {
        let code: Vec<Option<u32>> = s.iter().map(|&w| d[w][v]).collect();
        if seen.contains(&code) {
            return false;
        }
        seen.push(code);
    }
    true
}

pub fn dominates(g: &Graph, mask: u64) -> bool {
    let adj = adjacency(g);
    (0..g.order()).all(|v| mask >> v & 1 == 1 || (0..g.order()).any(|u| mask >> u & 1 == 1 && adj[u][v]))
}

pub fn k_dominates(g: &Graph, mask: u64, k: usize) -> bool {
    let adj = adjacency(g);
    (0..g.order()).all(|v| mask >> v & 1 == 1 || (0..g.order()).filter(|&u| mask >> u & 1 == 1 && adj[u][v]).count() >= k)
}

/// Dominating, and the traces `N(v) & S` of vertices outside `S` are distinct.
pub fn locates(g: &Graph, mask: u64) -> bool {
    if !dominates(g, mask) {
        return false;
    }
    let adj = adjacency(g);
    let n = g.order();
    let outside: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
    let trace = |v: usize| (0..n).filter(|&u| mask >> u & 1 == 1 && adj[u][v]).collect::<Vec<_>>();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            if trace(x) == trace(y) {
                return false;
            }
        }
    }
    true
}

/// Smallest size of a vertex subset with the property.
pub fn min_size(g: &Graph, ok: impl Fn(u64) -> bool) -> usize {
    let n = g.order();
    (0u64..1 << n).filter(|&m| ok(m)).map(|m| m.count_ones() as usize).min().expect("the full set qualifies")
}

pub fn max_size(g: &Graph, ok: impl Fn(u64) -> bool) -> usize {
    let n = g.order();
    (0u64..1 << n).filter(|&m| ok(m)).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

pub fn independent(g: &Graph, mask: u64) -> bool {
    let s = members(mask, g.order());
    s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v)))
}

pub fn clique(g: &Graph, mask: u64) -> bool {
    let s = members(mask, g.order());
    s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
}

pub fn minimal_dominating(g: &Graph, mask: u64) -> bool {
    dominates(g, mask) && members(mask, g.order()).iter().all(|&v| !dominates(g, mask & !(1 << v)))
}

/// Fewest colours in a proper colouring, by trying `k = 1, 2, ..`.
pub fn chromatic(g: &Graph) -> usize {
    let n = g.order();
    fn colour(g: &Graph, v: usize, k: usize, c: &mut Vec<usize>) -> bool {
        if v == g.order() {
            return true;
        }
        for x in 0..k {
            if (0..v).all(|u| !(g.has_edge(u, v) && c[u] == x)) {
                c[v] = x;
                if colour(g, v + 1, k, c) {
                    return true;
                }
            }
        }
        false
    }
    (1..=n).find(|&k| colour(g, 0, k, &mut vec![0; n])).unwrap_or(0)
}

/// Maximum matching size by exhaustive edge selection.
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, used: u64, from: usize) -> usize {
        let n = g.order();
        let Some(u) = (from..n).find(|&u| used >> u & 1 == 0) else { return 0 };
        let mut best = go(g, used | 1 << u, u + 1);
        for v in u + 1..n {
            if used >> v & 1 == 0 && g.has_edge(u, v) {
                best = best.max(1 + go(g, used | 1 << u | 1 << v, u + 1));
            }
        }
        best
    }
    go(g, 0, 0)
}

/// Every automorphism, by trying all permutations. Use for `n <= 8`.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let adj = adjacency(g);
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, adj: &[Vec<bool>], out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            let n = perm.len();
            if (0..n).all(|u| (0..n).all(|v| adj[u][v] == adj[perm[u]][perm[v]])) {
                out.push(perm.clone());
            }
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, adj, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, &adj, &mut out);
    out
}

/// Smallest set fixed pointwise only by the identity.
pub fn determining(g: &Graph) -> usize {
    let auts = automorphisms(g);
    let n = g.order();
    min_size(g, |m| auts.iter().filter(|p| (0..n).all(|v| m >> v & 1 == 0 || p[v] == v)).count() == 1)
}

pub fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let adj = adjacency(g);
    (0..g.order()).filter(|&w| w != u && w != v).all(|w| adj[u][w] == adj[v][w])
}

/// Decodes a Prufer sequence over `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}
