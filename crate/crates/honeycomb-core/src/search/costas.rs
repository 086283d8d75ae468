use std::sync::Arc;

use crate::config::Permutation;

use super::pool::run_ordered;
use super::{Budget, SearchError, SearchOptions, BUDGET_STRIDE};

/// Bitmask width: row and difference tables live in `u64`s.
pub const COSTAS_ORDER_LIMIT: usize = 32;
/// Orders above this are refused unless an explicit node budget is given.
pub const COSTAS_ORDER_GUARD: usize = 17;

/// Backtracking enumerator over Costas arrays of order `n` in
/// lexicographic one-line order.
///
/// Dots are placed column by column. For every column gap `d` the engine
/// keeps a bitmask of row deltas already realised by a pair of dots `d`
/// columns apart; a candidate dot is rejected as soon as any of its new
/// difference vectors repeats one of those. The new vectors of a single
/// candidate have pairwise distinct column gaps, so they cannot collide
/// with each other.
struct CostasEngine {
    n: usize,
    /// Columns below this depth are pinned; backtracking stops there.
    floor: usize,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    used_rows: u64,
    /// `diffs[d]` holds bit `row_delta + n - 1` for every seen pair at
    /// column gap `d`; entry 0 is unused.
    diffs: Vec<u64>,
    nodes: u64,
    done: bool,
    budget: Option<Arc<Budget>>,
    uncharged: u64,
}

impl CostasEngine {
    fn new(n: usize, budget: Option<Arc<Budget>>) -> Result<Self, SearchError> {
        if n == 0 {
            return Err(SearchError::EmptySearch);
        }
        if n > COSTAS_ORDER_LIMIT {
            return Err(SearchError::StructuralLimit {
                what: "costas order",
                given: n,
                limit: COSTAS_ORDER_LIMIT,
            });
        }
        Ok(CostasEngine {
            n,
            floor: 0,
            prefix: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            used_rows: 0,
            diffs: vec![0; n],
            nodes: 0,
            done: false,
            budget,
            uncharged: 0,
        })
    }

    /// Pins `prefix` as the first columns; returns `None` if the prefix
    /// itself violates the Costas conditions.
    fn with_prefix(
        n: usize,
        prefix: &[usize],
        budget: Option<Arc<Budget>>,
    ) -> Result<Option<Self>, SearchError> {
        let mut engine = Self::new(n, budget)?;
        for &v in prefix {
            if !engine.try_place(v) {
                return Ok(None);
            }
        }
        // Prefix placements belong to the task-splitting pass, not the task.
        engine.nodes = 0;
        engine.uncharged = 0;
        engine.floor = prefix.len();
        Ok(Some(engine))
    }

    fn try_place(&mut self, v: usize) -> bool {
        if self.used_rows & (1 << v) != 0 {
            return false;
        }
        let c = self.prefix.len();
        let offset = self.n as i64 - 1;
        for j in 0..c {
            let bit = (v as i64 - self.prefix[j] as i64 + offset) as usize;
            if self.diffs[c - j] & (1 << bit) != 0 {
                return false;
            }
        }
        for j in 0..c {
            let bit = (v as i64 - self.prefix[j] as i64 + offset) as usize;
            self.diffs[c - j] |= 1 << bit;
        }
        self.used_rows |= 1 << v;
        self.prefix.push(v);
        self.nodes += 1;
        self.uncharged += 1;
        true
    }

    fn unplace(&mut self) {
        let v = self.prefix.pop().expect("place/unplace balanced");
        let c = self.prefix.len();
        let offset = self.n as i64 - 1;
        for j in 0..c {
            let bit = (v as i64 - self.prefix[j] as i64 + offset) as usize;
            self.diffs[c - j] &= !(1 << bit);
        }
        self.used_rows &= !(1 << v);
    }

    fn charge_budget(&mut self, force: bool) -> Result<(), SearchError> {
        if let Some(budget) = &self.budget {
            if force || self.uncharged >= BUDGET_STRIDE {
                budget.charge(self.uncharged)?;
                self.uncharged = 0;
            }
        }
        Ok(())
    }

    /// Advances to the next complete Costas array; `Ok(None)` when the
    /// subtree under the pinned prefix is exhausted.
    fn advance(&mut self) -> Result<Option<Vec<usize>>, SearchError> {
        if self.done {
            return Ok(None);
        }
        loop {
            self.charge_budget(false)?;
            let depth = self.prefix.len();
            if depth == self.n {
                // Deliver the current array, then resume behind it.
                let solution = self.prefix.clone();
                if depth == self.floor {
                    self.done = true;
                } else {
                    self.unplace();
                }
                return Ok(Some(solution));
            }
            let mut placed = false;
            for v in self.cursor[depth]..self.n {
                if self.try_place(v) {
                    self.cursor[depth] = v + 1;
                    self.cursor[depth + 1] = 0;
                    placed = true;
                    break;
                }
            }
            if !placed {
                if depth == self.floor {
                    self.done = true;
                    self.charge_budget(true)?;
                    return Ok(None);
                }
                self.unplace();
            }
        }
    }
}

/// Streaming Costas enumeration in lexicographic order. The iterator is
/// single threaded and unguarded; use [`enumerate_costas`] for the guarded,
/// parallel entry point.
pub struct CostasIter {
    engine: CostasEngine,
}

impl CostasIter {
    pub fn new(n: usize) -> Result<Self, SearchError> {
        Ok(CostasIter { engine: CostasEngine::new(n, None)? })
    }

    /// Search-tree nodes (dot placements) visited so far.
    pub fn nodes(&self) -> u64 {
        self.engine.nodes
    }
}

impl Iterator for CostasIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        // No budget attached, so advance cannot fail.
        self.engine
            .advance()
            .expect("unbudgeted engine")
            .map(|image| Permutation::new(image).expect("bijection by construction"))
    }
}

/// Valid placements for the first `depth` columns, in lexicographic order,
/// plus the node count of the probe pass itself.
fn lex_prefixes(n: usize, depth: usize) -> (Vec<Vec<usize>>, u64) {
    let mut out = Vec::new();
    let mut scratch = CostasEngine::new(n, None).expect("validated by caller");
    fn rec(engine: &mut CostasEngine, depth: usize, out: &mut Vec<Vec<usize>>) {
        if engine.prefix.len() == depth {
            out.push(engine.prefix.clone());
            return;
        }
        for v in 0..engine.n {
            if engine.try_place(v) {
                rec(engine, depth, out);
                engine.unplace();
            }
        }
    }
    rec(&mut scratch, depth, &mut out);
    (out, scratch.nodes)
}

/// Every Costas array of order `n`, exactly once, sorted lexicographically.
///
/// The search tree is split at a fixed prefix depth of 2 into independent
/// tasks; merging task outputs in prefix order makes the result identical
/// for any worker count.
pub fn enumerate_costas(
    n: usize,
    opts: &SearchOptions,
) -> Result<Vec<Permutation>, SearchError> {
    if n == 0 {
        return Err(SearchError::EmptySearch);
    }
    if n > COSTAS_ORDER_LIMIT {
        return Err(SearchError::StructuralLimit {
            what: "costas order",
            given: n,
            limit: COSTAS_ORDER_LIMIT,
        });
    }
    if n > COSTAS_ORDER_GUARD && opts.node_budget.is_none() {
        return Err(SearchError::GuardExceeded {
            what: "costas order",
            given: n,
            limit: COSTAS_ORDER_GUARD,
        });
    }
    let budget = opts.node_budget.map(|limit| Arc::new(Budget::new(limit)));
    let (tasks, probe_nodes) = lex_prefixes(n, 2.min(n));
    if let Some(b) = &budget {
        b.charge(probe_nodes)?;
    }
    let results = run_ordered(&tasks, opts.workers, |prefix| {
        let mut engine = CostasEngine::with_prefix(n, prefix, budget.clone())?
            .expect("prefixes are pre-validated");
        let mut found = Vec::new();
        while let Some(image) = engine.advance()? {
            found.push(Permutation::new(image).expect("bijection by construction"));
        }
        Ok(found)
    });
    let mut merged = Vec::new();
    for r in results {
        merged.extend(r?);
    }
    Ok(merged)
}
