//! Exact enumerators and solvers: Costas arrays, hexagonal permutations,
//! the Costas-to-honeycomb pipeline, maximum non-attacking brooks, and the
//! 6-fold-symmetric honeycomb search.

mod brooks;
mod costas;
mod hexperm;
mod honeycomb;
mod pool;
mod symmetric;

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

pub use brooks::{max_brooks, BrooksResult};
pub use costas::{enumerate_costas, CostasIter, COSTAS_ORDER_GUARD, COSTAS_ORDER_LIMIT};
pub use hexperm::{
    count_hex_permutations, enumerate_hex_permutations, CountResult, HexPermIter,
    HEXPERM_DOTS_GUARD, HEXPERM_DOTS_LIMIT,
};
pub use honeycomb::{costas_to_honeycomb, growth_report, search_honeycomb, GrowthRow};
pub use symmetric::{search_symmetric_honeycomb, SYMMETRIC_RADIUS_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search size must be at least 1")]
    EmptySearch,
    #[error("{what} {given} exceeds the structural limit {limit}")]
    StructuralLimit {
        what: &'static str,
        given: usize,
        limit: usize,
    },
    #[error("{what} {given} exceeds the desk-scale guard {limit}; pass an explicit node budget to override")]
    GuardExceeded {
        what: &'static str,
        given: usize,
        limit: usize,
    },
    #[error("node budget {budget} exhausted before the search finished")]
    BudgetExceeded { budget: u64 },
    #[error("input permutation is not a Costas array")]
    NotCostas,
}

/// Knobs shared by all enumerators.
///
/// `node_budget` doubles as the desk-scale override: with `None`, the
/// guarded entry points refuse sizes above their guard constants; with
/// `Some(limit)`, any size within structural limits is attempted but the
/// search aborts once `limit` nodes have been visited.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub workers: usize,
    pub node_budget: Option<u64>,
    /// Skip searches over even dot counts without running them; an even
    /// number of dots provably admits no hexagonal permutation, so those
    /// searches return empty. Turn off to validate that claim by exhaustion.
    pub odd_shortcut: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            node_budget: None,
            odd_shortcut: true,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions { workers: workers.max(1), ..Self::default() }
    }
}

/// Shared node-budget meter. Workers charge visited nodes in batches; the
/// pass/fail outcome depends only on the total, which is schedule
/// independent, so budget errors are deterministic.
pub(crate) struct Budget {
    used: AtomicU64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { used: AtomicU64::new(0), limit }
    }

    pub(crate) fn charge(&self, nodes: u64) -> Result<(), SearchError> {
        let prev = self.used.fetch_add(nodes, Ordering::Relaxed);
        if prev.saturating_add(nodes) > self.limit {
            Err(SearchError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// How many nodes a kernel visits between budget checks.
pub(crate) const BUDGET_STRIDE: u64 = 4096;
