//! One PASS/FAIL line per acceptance criterion. Every tolerance is zero: each
//! criterion passes only when every instance of every suite passes.

use std::time::{Duration, Instant};

use locdom::corpus::{for_each_connected, instance_rng, random_graph, RandomCorpus, RandomKind};
use locdom::harness::{corpus_extremes, verify, Corpus, VerificationReport, VerifyParams};
use locdom::matching::maximum_matching;
use locdom::trees::tree_metric_dimension;
use locdom::{Graph, VertexSet};
use rand::Rng;

const SEED: u64 = 20240611;
const FAMILY_TIME_LIMIT: Duration = Duration::from_secs(60);
const GREEDY_TIME_LIMIT: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
    /// Serialized reports, compared byte for byte by the determinism check.
    reports: Vec<String>,
}

fn params(corpus: Corpus) -> VerifyParams {
    VerifyParams { corpus: Some(corpus), seed: Some(SEED), ..Default::default() }
}

fn random(kind: RandomKind, count: usize, n_min: usize, n_max: usize) -> Corpus {
    Corpus::Random(RandomCorpus { kind, seed: SEED, count, n_min, n_max })
}

/// Runs statements over corpora; passes when every report is clean.
fn suites(runs: &[(&str, VerifyParams)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut reports = Vec::new();
    for (id, p) in runs {
        match verify(id, p) {
            Ok(r) => {
                pass &= r.all_pass();
                parts.push(summary(id, &r));
                reports.push(r.to_json_lines());
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{id}: error {e}"));
            }
        }
    }
    Outcome { pass, detail: parts.join("; "), reports }
}

fn summary(id: &str, r: &VerificationReport) -> String {
    format!("{id} {}/{} pass", r.summary.pass, r.summary.instances)
}

fn family_values() -> Outcome {
    let start = Instant::now();
    let mut o = suites(&[("family-values", VerifyParams { r: Some(6), ..Default::default() }), (
        "family-values",
        VerifyParams { r: Some(7), ..Default::default() },
    )]);
    let took = start.elapsed();
    o.pass &= took < FAMILY_TIME_LIMIT;
    o.detail += &format!("; {:.1}s (limit {}s)", took.as_secs_f64(), FAMILY_TIME_LIMIT.as_secs());
    o
}

fn gap_witnesses() -> Outcome {
    suites(&[("gap-witness", VerifyParams { orders: Some((14, 17)), ..Default::default() })])
}

fn twin_free_corpora() -> [Corpus; 2] {
    [Corpus::AllTwinFree { n_min: 1, n_max: 7 }, random(RandomKind::TwinFree, 500, 4, 14)]
}

fn ore_locating() -> Outcome {
    let runs: Vec<_> = twin_free_corpora().into_iter().map(|c| ("ore-locating", params(c))).collect();
    suites(&runs)
}

fn corollaries() -> Outcome {
    let ids = ["upper-domination-bound", "independence-clique-bound", "chromatic-bound", "ramsey-bound"];
    let runs: Vec<_> =
        ids.iter().flat_map(|&id| twin_free_corpora().into_iter().map(move |c| (id, params(c)))).collect();
    suites(&runs)
}

fn greedy() -> Outcome {
    let start = Instant::now();
    let corpora = [random(RandomKind::TwinFree, 1000, 8, 24), Corpus::AllTwinFree { n_min: 1, n_max: 7 }];
    let ids = ["greedy-partition", "greedy-ld-size", "greedy-det-size"];
    let runs: Vec<_> = ids.iter().flat_map(|&id| corpora.iter().map(move |c| (id, params(c.clone())))).collect();
    let mut o = suites(&runs);
    let took = start.elapsed();
    o.pass &= took < GREEDY_TIME_LIMIT;
    o.detail += &format!("; {:.1}s (limit {}s)", took.as_secs_f64(), GREEDY_TIME_LIMIT.as_secs());
    o
}

/// Whether `free` contains `need` disjoint edges, by exhaustive branching on
/// the smallest free vertex.
fn has_matching(adj: &[u64], free: u64, need: u32) -> bool {
    if need == 0 {
        return true;
    }
    if free.count_ones() < 2 * need {
        return false;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut nb = adj[v] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros();
        if has_matching(adj, rest & !(1 << w), need - 1) {
            return true;
        }
        nb &= nb - 1;
    }
    has_matching(adj, rest, need)
}

/// Blossom size equals the brute-force matching number. A matching of size
/// `floor(n/2)` needs no search beyond validating its edges.
fn blossom_agrees(g: &Graph) -> bool {
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let m = maximum_matching(g);
    let mut used = 0u64;
    for &(a, b) in &m.edges {
        if !g.has_edge(a, b) || used >> a & 1 == 1 || used >> b & 1 == 1 {
            return false;
        }
        used |= 1 << a | 1 << b;
    }
    m.len() == n / 2 || !has_matching(&adj, VertexSet::full(n).bits(), m.len() as u32 + 1)
}

fn matching() -> Outcome {
    let mut checked = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for n in 1..=10 {
        let r = for_each_connected(n, false, |g| {
            checked += 1;
            if !blossom_agrees(g) {
                bad.push(locdom::graph6::emit_graph6(g));
            }
        });
        if let Err(e) = r {
            bad.push(format!("enumeration n={n}: {e}"));
        }
    }
    for i in 0..500u64 {
        let mut rng = instance_rng(SEED, i);
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.35).expect("valid order");
        checked += 1;
        if !blossom_agrees(&g) {
            bad.push(locdom::graph6::emit_graph6(&g));
        }
    }
    let exhaustive = format!("blossom vs brute {}/{} agree", checked - bad.len(), checked);
    let c4 = random(RandomKind::C4FreeTwinFree, 500, 4, 24);
    let mut o = suites(&[
        ("um-elimination", params(Corpus::AllTwinFree { n_min: 1, n_max: 8 })),
        ("um-elimination", params(c4.clone())),
        ("matching-ld", params(c4)),
    ]);
    o.pass &= bad.is_empty();
    o.reports.push(format!("{exhaustive}\n{}\n", bad.join("\n")));
    o.detail = format!("{exhaustive}; {}", o.detail);
    o
}

fn trees() -> Outcome {
    let mut o = suites(&[
        ("tree-dimension", params(Corpus::AllTrees { n_min: 1, n_max: 10 })),
        ("tree-dimension", params(random(RandomKind::Tree, 500, 2, 14))),
        ("tree-leg-lengths", params(random(RandomKind::Tree, 2000, 4, 30))),
        ("tree-det-bound", params(random(RandomKind::Tree, 2000, 4, 30))),
    ]);
    let mut exact = Vec::new();
    for (s, want) in [(0, 14), (3, 14), (5, 15)] {
        let g = locdom::families::gen(locdom::families::FamilySpec::Tqs { q: 7, s }).expect("valid family");
        let dim = tree_metric_dimension(&g).map(|r| r.value).ok();
        let det = locdom::symmetry::determining_number(&g, &Default::default()).map(|r| r.value).ok();
        let ok = dim == Some(want) && det == Some(0);
        o.pass &= ok;
        exact.push(format!("T(7,{s}) dim={dim:?} det={det:?}"));
    }
    o.reports.push(exact.join("\n"));
    o.detail += &format!("; {}", exact.join(", "));
    o
}

fn extremes() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut reports = Vec::new();
    for n in [6, 7] {
        let graphs = locdom::corpus::connected_graphs(n).expect("n is within the enumeration cap");
        match corpus_extremes(&graphs, &Default::default()) {
            Ok(r) => {
                pass &= r.chain_violations.is_empty() && r.reduction_violations.is_empty();
                parts.push(format!(
                    "n={n}: {} graphs, max dim-Det {}, max lambda-Det {}, chain violations {}, reduction violations {}",
                    r.count,
                    r.max_dim_minus_det.value,
                    r.max_lambda_minus_det.value,
                    r.chain_violations.len(),
                    r.reduction_violations.len()
                ));
                reports.push(serde_json::to_string(&r).expect("report serializes"));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("n={n}: error {e}"));
            }
        }
    }
    Outcome { pass, detail: parts.join("; "), reports }
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 8] = [
    ("family values, r = 6, 7", family_values),
    ("gap witnesses, n = 14..17", gap_witnesses),
    ("minimal dominating complements locate", ore_locating),
    ("lambda bounds and Ramsey premise", corollaries),
    ("greedy partition suite", greedy),
    ("matching suite", matching),
    ("tree suite", trees),
    ("corpus extremes, n = 6, 7", extremes),
];

fn main() {
    let mut all = true;
    let mut first_reports = Vec::new();
    for (k, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "criterion {}: {} {name} [{}] ({:.1}s)",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
        first_reports.push(o.reports);
    }
    let start = Instant::now();
    let mut differing = Vec::new();
    for (k, (_, run)) in CRITERIA.iter().enumerate() {
        if run().reports != first_reports[k] {
            differing.push(k + 1);
        }
    }
    let det_pass = differing.is_empty();
    all &= det_pass;
    println!(
        "criterion 9: {} determinism [{} report sets rerun, differing: {:?}] ({:.1}s)",
        if det_pass { "PASS" } else { "FAIL" },
        CRITERIA.len(),
        differing,
        start.elapsed().as_secs_f64()
    );
    if !all {
        std::process::exit(1);
    }
}
