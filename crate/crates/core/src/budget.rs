use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Caller-supplied limits for the exact solvers.
///
/// `cap` overrides the solver's default order cap; `time_budget` turns a run
/// that would exceed it into [`Error::Timeout`] instead of a partial answer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub cap: Option<usize>,
    pub time_budget: Option<Duration>,
}

impl SolverConfig {
    pub fn with_cap(cap: usize) -> Self {
        SolverConfig { cap: Some(cap), ..Default::default() }
    }

    pub(crate) fn check_cap(&self, g: &Graph, default_cap: usize) -> Result<()> {
        let cap = self.cap.unwrap_or(default_cap);
        if g.order() > cap {
            Err(Error::CapExceeded { n: g.order(), cap })
        } else {
            Ok(())
        }
    }

    pub(crate) fn budget(&self) -> Budget {
        Budget { deadline: self.time_budget.map(|d| Instant::now() + d), ticks: 0 }
    }
}

/// Default order caps.
pub mod caps {
    /// Subset-search minimisation (dim, lambda, gamma, gamma_k).
    pub const SUBSET_SEARCH: usize = 24;
    /// Upper domination, which filters every dominating set for minimality.
    pub const UPPER_DOMINATION: usize = 18;
    /// Determining number on general graphs.
    pub const DETERMINING: usize = 20;
    /// Determining number on trees.
    pub const DETERMINING_TREE: usize = 50;
    /// Branch-and-bound solvers (alpha, omega, chi) and orbit computation.
    pub const BRANCH_AND_BOUND: usize = 64;
}

pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Budget {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout);
                }
            }
        }
        Ok(())
    }
}

/// How an [`InvariantResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SubsetSearch,
    Formula,
    Construction,
}

/// An exact invariant value together with a set attaining it.
///
/// For minimisation invariants `witness.len() == value`; for maximisation
/// invariants likewise. The chromatic number stores one colour per vertex in
/// `coloring` and uses the first colour class as `witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

impl InvariantResult {
    pub(crate) fn search(witness: VertexSet) -> Self {
        InvariantResult {
            value: witness.len(),
            witness,
            method: Method::SubsetSearch,
            coloring: None,
        }
    }
}
