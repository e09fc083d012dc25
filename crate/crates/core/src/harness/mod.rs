//! Checks of the library's claims over graph corpora, reported per instance.

mod checks;
mod extremes;
mod report;

use serde::Serialize;

pub use checks::{statement_ids, verify, VerifyParams, STATEMENTS};
pub use extremes::{corpus_extremes, find_ore_witness, ConjectureEvidence, Extreme, ExtremesReport, OreWitness};
pub use report::{Instance, Summary, VerificationReport};

use crate::corpus::{for_each_connected, RandomCorpus};
use crate::error::{Error, Result};
use crate::families::{gen, FamilySpec};
use crate::graph::Graph;
use crate::twins::is_twin_free;

/// Largest order materialised by the exhaustive corpora.
pub const EXHAUSTIVE_MAX_ORDER: usize = 9;

/// Where the graphs of a report come from. Serialized into every report.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "corpus", rename_all = "kebab-case")]
pub enum Corpus {
    /// Every connected graph of each order, up to isomorphism.
    AllConnected { n_min: usize, n_max: usize },
    /// Every connected twin-free graph of each order.
    AllTwinFree { n_min: usize, n_max: usize },
    AllTrees { n_min: usize, n_max: usize },
    Random(RandomCorpus),
    Families { specs: Vec<FamilySpec> },
    /// Graphs read from a file or stdin.
    Supplied {
        count: usize,
        #[serde(skip)]
        graphs: Vec<Graph>,
    },
}

impl Corpus {
    pub fn supplied(graphs: Vec<Graph>) -> Self {
        Corpus::Supplied { count: graphs.len(), graphs }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let exhaustive = |n_min: usize, n_max: usize, trees: bool, twin_free: bool| -> Result<Vec<Graph>> {
            let cap = if trees { 12 } else { EXHAUSTIVE_MAX_ORDER };
            if n_max > cap {
                return Err(Error::CapExceeded { n: n_max, cap });
            }
            let mut out = Vec::new();
            for n in n_min.max(1)..=n_max {
                for_each_connected(n, trees, |g| {
                    if !twin_free || is_twin_free(g) {
                        out.push(g.clone());
                    }
                })?;
            }
            Ok(out)
        };
        match self {
            Corpus::AllConnected { n_min, n_max } => exhaustive(*n_min, *n_max, false, false),
            Corpus::AllTwinFree { n_min, n_max } => exhaustive(*n_min, *n_max, false, true),
            Corpus::AllTrees { n_min, n_max } => exhaustive(*n_min, *n_max, true, false),
            Corpus::Random(rc) => rc.generate(),
            Corpus::Families { specs } => specs.iter().map(|&s| gen(s)).collect(),
            Corpus::Supplied { graphs, .. } => Ok(graphs.clone()),
        }
    }

    pub fn describe(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("corpus serializes")
    }
}
