//! Set predicates and exact solvers for the non-automorphism invariants.

mod predicates;
mod solvers;

pub use predicates::{
    complete_to_ld, distinguishes, is_clique, is_distinguishing, is_dominating, is_independent,
    is_k_dominating, is_locating_dominating, is_minimal_dominating, is_minimal_locating_dominating,
    is_resolving, resolves, Resolver,
};
pub use solvers::{
    chromatic_number, clique_number, domination_number, independence_number, k_domination_number,
    location_domination_number, metric_dimension, minimal_dominating_sets, ore_complement_ld,
    upper_domination_number,
};
