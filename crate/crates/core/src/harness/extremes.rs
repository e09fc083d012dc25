use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::SolverConfig;
use crate::corpus::for_each_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::invariants::{is_locating_dominating, is_minimal_locating_dominating, location_domination_number, metric_dimension};
use crate::symmetry::determining_number;
use crate::twins::is_twin_free;
use crate::vertex_set::{Combinations, VertexSet};

/// A corpus member attaining a maximum, with the sets behind its values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extreme {
    pub value: i64,
    /// Position in the input stream.
    pub index: usize,
    pub graph6: String,
    pub dim: usize,
    pub det: usize,
    pub lambda: usize,
    pub witnesses: BTreeMap<String, VertexSet>,
}

/// The largest twin-free lambda set against `floor(n/2)`. Evidence only: a
/// finite corpus says nothing about the maximum over all graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureEvidence {
    pub label: &'static str,
    pub floor_half_n: usize,
    pub max_twin_free_lambda: usize,
    pub reaches_floor_half: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremesReport {
    pub n: usize,
    pub count: usize,
    pub twin_free_count: usize,
    pub max_dim_minus_det: Extreme,
    pub max_lambda_minus_det: Extreme,
    pub max_twin_free_lambda: Option<Extreme>,
    pub conjecture_evidence: Option<ConjectureEvidence>,
    /// Stream positions where `Det <= dim <= lambda` fails.
    pub chain_violations: Vec<usize>,
    /// Stream positions where `lambda - Det` exceeds the largest twin-free lambda.
    pub reduction_violations: Vec<usize>,
}

/// Maxima of `dim - Det`, `lambda - Det` and twin-free `lambda` over a corpus
/// of connected graphs of one order. Ties go to the earliest graph.
pub fn corpus_extremes(graphs: &[Graph], cfg: &SolverConfig) -> Result<ExtremesReport> {
    let first = graphs.first().ok_or_else(|| Error::BadParams("empty corpus".into()))?;
    let n = first.order();
    if let Some(g) = graphs.iter().find(|g| g.order() != n) {
        return Err(Error::MixedOrders { first: n, other: g.order() });
    }
    let rows: Vec<(Extreme, bool)> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let dim = metric_dimension(g, cfg)?;
            let det = determining_number(g, cfg)?;
            let lam = location_domination_number(g, cfg)?;
            let witnesses =
                BTreeMap::from([("dim".into(), dim.witness), ("det".into(), det.witness), ("lambda".into(), lam.witness)]);
            let e = Extreme {
                value: 0,
                index,
                graph6: emit_graph6(g),
                dim: dim.value,
                det: det.value,
                lambda: lam.value,
                witnesses,
            };
            Ok((e, is_twin_free(g)))
        })
        .collect::<Result<_>>()?;
    let argmax = |f: &dyn Fn(&Extreme) -> i64, keep: &dyn Fn(bool) -> bool| -> Option<Extreme> {
        let mut best: Option<Extreme> = None;
        for (e, tf) in &rows {
            let v = f(e);
            if keep(*tf) && best.as_ref().is_none_or(|b| v > b.value) {
                best = Some(Extreme { value: v, ..e.clone() });
            }
        }
        best
    };
    let gap_dim = |e: &Extreme| e.dim as i64 - e.det as i64;
    let gap_lambda = |e: &Extreme| e.lambda as i64 - e.det as i64;
    let max_dim_minus_det = argmax(&gap_dim, &|_| true).expect("nonempty corpus");
    let max_lambda_minus_det = argmax(&gap_lambda, &|_| true).expect("nonempty corpus");
    let max_twin_free_lambda = argmax(&|e| e.lambda as i64, &|tf| tf);
    let chain_violations = rows.iter().filter(|(e, _)| !(e.det <= e.dim && e.dim <= e.lambda)).map(|(e, _)| e.index).collect();
    let reduction_violations = match &max_twin_free_lambda {
        Some(m) => rows.iter().filter(|(e, _)| gap_lambda(e) > m.value).map(|(e, _)| e.index).collect(),
        None => Vec::new(),
    };
    let conjecture_evidence = max_twin_free_lambda.as_ref().map(|m| ConjectureEvidence {
        label: "conjecture evidence",
        floor_half_n: n / 2,
        max_twin_free_lambda: m.lambda,
        reaches_floor_half: m.lambda >= n / 2,
    });
    Ok(ExtremesReport {
        n,
        count: graphs.len(),
        twin_free_count: rows.iter().filter(|(_, tf)| *tf).count(),
        max_dim_minus_det,
        max_lambda_minus_det,
        max_twin_free_lambda,
        conjecture_evidence,
        chain_violations,
        reduction_violations,
    })
}

/// A twin-free graph with a minimal locating-dominating set whose complement
/// is not locating-dominating.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OreWitness {
    pub graph6: String,
    pub n: usize,
    pub set: VertexSet,
    pub complement: VertexSet,
}

/// Largest order [`find_ore_witness`] will enumerate.
pub const ORE_SEARCH_MAX_ORDER: usize = 9;

/// Searches connected twin-free graphs by increasing order (enumeration
/// order within an order, colex within a graph) and returns the first hit.
pub fn find_ore_witness(max_n: usize, cfg: &SolverConfig) -> Result<Option<OreWitness>> {
    if max_n > ORE_SEARCH_MAX_ORDER {
        return Err(Error::CapExceeded { n: max_n, cap: ORE_SEARCH_MAX_ORDER });
    }
    let mut budget = cfg.budget();
    for n in 4..=max_n {
        let mut found = None;
        let mut err = None;
        for_each_connected(n, false, |g| {
            if found.is_some() || err.is_some() || !is_twin_free(g) {
                return;
            }
            for k in 1..n {
                for s in Combinations::new(g.vertices(), k) {
                    if let Err(e) = budget.tick() {
                        err = Some(e);
                        return;
                    }
                    let rest = g.vertices() - s;
                    if is_minimal_locating_dominating(g, s) && !is_locating_dominating(g, rest) {
                        found = Some(OreWitness { graph6: emit_graph6(g), n, set: s, complement: rest });
                        return;
                    }
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
