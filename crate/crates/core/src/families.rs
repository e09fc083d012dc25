//! Generators for the named graph families, with vertex labels.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,k}`.
    Star { k: usize },
    /// `K_1 + C_n`, hub 0 and rim `1..=n`.
    Wheel { n: usize },
    /// Path `u1..ur` with a pendant `u0` on `u3`.
    T { r: usize },
    /// `T_r` with a pendant `v_i` on every `u_i`.
    G { r: usize },
    /// `G_r` with a second pendant `v0'` on `u0`.
    H { r: usize },
    /// The extremal trees of order `7q + s`.
    Tqs { q: usize, s: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BadParams(m));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n == 0 => bad("n must be at least 1".into()),
            FamilySpec::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Star { k: 0 } => bad("star needs k >= 1".into()),
            FamilySpec::Wheel { n } if n < 3 => bad(format!("wheel needs n >= 3, got {n}")),
            FamilySpec::T { r } | FamilySpec::G { r } | FamilySpec::H { r } if r < 6 => {
                bad(format!("r must be at least 6, got {r}"))
            }
            FamilySpec::Tqs { q, .. } if q < 7 => bad(format!("q must be at least 7, got {q}")),
            FamilySpec::Tqs { s, .. } if s >= 7 => bad(format!("s must be in 0..7, got {s}")),
            _ => Ok(()),
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::Star { k } => k + 1,
            FamilySpec::Wheel { n } => n + 1,
            FamilySpec::T { r } => r + 1,
            FamilySpec::G { r } => 2 * r + 2,
            FamilySpec::H { r } => 2 * r + 3,
            FamilySpec::Tqs { q, s } => 7 * q + s,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path {n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle {n}"),
            FamilySpec::Complete { n } => write!(f, "complete {n}"),
            FamilySpec::Star { k } => write!(f, "star {k}"),
            FamilySpec::Wheel { n } => write!(f, "wheel {n}"),
            FamilySpec::T { r } => write!(f, "T {r}"),
            FamilySpec::G { r } => write!(f, "G {r}"),
            FamilySpec::H { r } => write!(f, "H {r}"),
            FamilySpec::Tqs { q, s } => write!(f, "Tqs {q} {s}"),
        }
    }
}

/// Parses `"<name> <params...>"`, e.g. `"G 6"` or `"Tqs 7 3"`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut parts = text.split_whitespace();
        let name = parts.next().ok_or_else(|| Error::BadParams("empty family spec".into()))?;
        let nums: Vec<usize> = parts
            .map(|p| p.parse().map_err(|_| Error::BadParams(format!("`{p}` is not a count"))))
            .collect::<Result<_>>()?;
        let one = |nums: &[usize]| match nums {
            [x] => Ok(*x),
            _ => Err(Error::BadParams(format!("family `{name}` takes one parameter"))),
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path { n: one(&nums)? },
            "cycle" => FamilySpec::Cycle { n: one(&nums)? },
            "complete" => FamilySpec::Complete { n: one(&nums)? },
            "star" => FamilySpec::Star { k: one(&nums)? },
            "wheel" => FamilySpec::Wheel { n: one(&nums)? },
            "t" => FamilySpec::T { r: one(&nums)? },
            "g" => FamilySpec::G { r: one(&nums)? },
            "h" => FamilySpec::H { r: one(&nums)? },
            "tqs" => match nums[..] {
                [q, s] => FamilySpec::Tqs { q, s },
                _ => return Err(Error::BadParams("family `Tqs` takes two parameters".into())),
            },
            other => return Err(Error::BadParams(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn gen(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match spec {
        FamilySpec::Path { n } => path(n)?,
        FamilySpec::Cycle { n } => cycle(n)?,
        FamilySpec::Complete { n } => Graph::complete(n)?,
        FamilySpec::Star { k } => {
            let e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::new(k + 1, &e)?
        }
        FamilySpec::Wheel { n } => {
            let mut e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            e.extend((1..=n).map(|i| (i, i % n + 1)));
            let mut labels = vec!["hub".to_string()];
            labels.extend((1..=n).map(|i| format!("c{i}")));
            Graph::new(n + 1, &e)?.with_labels(labels)
        }
        FamilySpec::T { r } => t_r(r)?,
        FamilySpec::G { r } => t_r(r)?.corona_k1()?,
        FamilySpec::H { r } => t_r(r)?.corona_k1()?.add_vertex(VertexSet::singleton(0), Some("v0'".into()))?,
        FamilySpec::Tqs { q, s } => t_qs(q, s)?,
    };
    debug_assert_eq!(g.order(), spec.order());
    Ok(g)
}

fn path(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e)
}

fn cycle(n: usize) -> Result<Graph> {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e)
}

/// Vertex `i` is `u_i`.
fn t_r_edges(r: usize) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = (2..=r).map(|i| (i - 1, i)).collect();
    e.push((0, 3));
    e
}

fn t_r(r: usize) -> Result<Graph> {
    let labels = (0..=r).map(|i| format!("u{i}")).collect();
    Ok(Graph::new(r + 1, &t_r_edges(r))?.with_labels(labels))
}

/// Spine `T_{q-1}` on vertices `0..q` (vertex `i` is spine `u_i`), each spine
/// vertex playing `u3` of its own copy of `T_6`. For `s <= 3` the spine edge
/// `{u1, u2}` is subdivided `s` times; for `s >= 4` a path of `s` new vertices
/// hangs from spine `u1`.
fn t_qs(q: usize, s: usize) -> Result<Graph> {
    let n = 7 * q + s;
    let mut edges: Vec<(usize, usize)> = t_r_edges(q - 1);
    let mut labels: Vec<String> = (0..q).map(|i| format!("x{i}")).collect();
    for i in 0..q {
        let base = labels.len();
        // copy vertices u0, u1, u2, u4, u5, u6 at base..base+6
        for j in [0, 1, 2, 4, 5, 6] {
            labels.push(format!("x{i}.u{j}"));
        }
        let (c0, c1, c2, c4, c5, c6) = (base, base + 1, base + 2, base + 3, base + 4, base + 5);
        edges.extend([(i, c0), (c1, c2), (c2, i), (i, c4), (c4, c5), (c5, c6)]);
    }
    let first_extra = labels.len();
    labels.extend((0..s).map(|j| format!("p{}", j + 1)));
    let extra: Vec<usize> = (first_extra..first_extra + s).collect();
    if (1..=3).contains(&s) {
        edges.retain(|&e| e != (1, 2));
        let mut prev = 1;
        for &x in &extra {
            edges.push((prev, x));
            prev = x;
        }
        edges.push((prev, 2));
    } else if s >= 4 {
        let mut prev = 1;
        for &x in &extra {
            edges.push((prev, x));
            prev = x;
        }
    }
    Ok(Graph::new(n, &edges)?.with_labels(labels))
}

/// A graph of order `n >= 14` with `dim - Det = floor(n/2) - 1`: the
/// complement of `G_{n/2-1}` for even `n`, of `H_{(n-1)/2-1}` for odd `n`.
/// [`gap_witness_base`] gives the un-complemented graph.
pub fn gap_witness(n: usize) -> Result<Graph> {
    Ok(gap_witness_base(n)?.complement())
}

/// `G_{n/2-1}` or `H_{(n-1)/2-1}`, with `lambda - Det = floor(n/2)`.
pub fn gap_witness_base(n: usize) -> Result<Graph> {
    if n < 14 {
        return Err(Error::BadParams(format!("witness order must be at least 14, got {n}")));
    }
    if n % 2 == 0 {
        gen(FamilySpec::G { r: n / 2 - 1 })
    } else {
        gen(FamilySpec::H { r: (n - 1) / 2 - 1 })
    }
}
