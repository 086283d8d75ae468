use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::config::Permutation;

use super::pool::run_ordered;
use super::{Budget, SearchError, SearchOptions, BUDGET_STRIDE};

/// Bitmask width for the even-count validation kernel (2n-1 diagonal slots).
pub const HEXPERM_DOTS_LIMIT: usize = 32;
/// Dot counts above this are refused unless an explicit node budget is given.
pub const HEXPERM_DOTS_GUARD: usize = 19;

/// Outcome of a counting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub num_dots: usize,
    pub count: u64,
    /// Search-tree nodes visited (dot placements); independent of the
    /// worker count.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Row-by-row backtracking over permutations `p` whose displacement values
/// `p[i] - i` are pairwise distinct and, at completion, consecutive — the
/// dots `(i, p[i])` then occupy consecutive lines in all three families.
///
/// For odd `n` the displacements of any full solution are forced to be
/// exactly `-(n-1)/2 ..= (n-1)/2`: they are distinct, consecutive, and sum
/// to zero (an identity for permutations), and no other window of `n`
/// consecutive integers sums to zero. The kernel therefore restricts
/// candidates to that window up front. For even `n` no centred window
/// exists; the kernel tracks the running displacement span instead and
/// prunes once it exceeds `n - 1`, which also makes "distinct with span at
/// most n-1" pigeonhole into "consecutive" at the leaves.
struct HexPermEngine {
    n: usize,
    centered: bool,
    floor: usize,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    used_cols: u64,
    used_diffs: u64,
    /// Running (min, max) displacement per depth; even kernel only.
    spans: Vec<(i32, i32)>,
    nodes: u64,
    done: bool,
    budget: Option<Arc<Budget>>,
    uncharged: u64,
}

impl HexPermEngine {
    fn new(num_dots: usize, budget: Option<Arc<Budget>>) -> Result<Self, SearchError> {
        if num_dots == 0 {
            return Err(SearchError::EmptySearch);
        }
        if num_dots > HEXPERM_DOTS_LIMIT {
            return Err(SearchError::StructuralLimit {
                what: "dot count",
                given: num_dots,
                limit: HEXPERM_DOTS_LIMIT,
            });
        }
        Ok(HexPermEngine {
            n: num_dots,
            centered: num_dots % 2 == 1,
            floor: 0,
            prefix: Vec::with_capacity(num_dots),
            cursor: vec![0; num_dots + 1],
            used_cols: 0,
            used_diffs: 0,
            spans: Vec::with_capacity(num_dots),
            nodes: 0,
            done: false,
            budget,
            uncharged: 0,
        })
    }

    fn with_prefix(
        num_dots: usize,
        prefix: &[usize],
        budget: Option<Arc<Budget>>,
    ) -> Result<Option<Self>, SearchError> {
        let mut engine = Self::new(num_dots, budget)?;
        for &v in prefix {
            if !engine.try_place(v) {
                return Ok(None);
            }
        }
        engine.nodes = 0;
        engine.uncharged = 0;
        engine.floor = prefix.len();
        Ok(Some(engine))
    }

    fn diff_bit(&self, diff: i32) -> u32 {
        if self.centered {
            (diff + (self.n as i32 - 1) / 2) as u32
        } else {
            (diff + self.n as i32 - 1) as u32
        }
    }

    fn try_place(&mut self, v: usize) -> bool {
        if self.used_cols & (1 << v) != 0 {
            return false;
        }
        let i = self.prefix.len() as i32;
        let diff = v as i32 - i;
        if self.centered && diff.abs() > (self.n as i32 - 1) / 2 {
            return false;
        }
        if !self.centered {
            let (lo, hi) = self
                .spans
                .last()
                .copied()
                .unwrap_or((diff, diff));
            if diff.max(hi) - diff.min(lo) > self.n as i32 - 1 {
                return false;
            }
        }
        let bit = self.diff_bit(diff);
        if self.used_diffs & (1 << bit) != 0 {
            return false;
        }
        if !self.centered {
            let (lo, hi) = self.spans.last().copied().unwrap_or((diff, diff));
            self.spans.push((lo.min(diff), hi.max(diff)));
        }
        self.used_diffs |= 1 << bit;
        self.used_cols |= 1 << v;
        self.prefix.push(v);
        self.nodes += 1;
        self.uncharged += 1;
        true
    }

    fn unplace(&mut self) {
        let v = self.prefix.pop().expect("place/unplace balanced");
        let i = self.prefix.len() as i32;
        let diff = v as i32 - i;
        self.used_diffs &= !(1 << self.diff_bit(diff));
        self.used_cols &= !(1 << v);
        if !self.centered {
            self.spans.pop();
        }
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

    fn advance(&mut self) -> Result<Option<Vec<usize>>, SearchError> {
        if self.done {
            return Ok(None);
        }
        loop {
            self.charge_budget(false)?;
            let depth = self.prefix.len();
            if depth == self.n {
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

/// Streaming enumeration of hexagonal permutations with `num_dots` dots,
/// as permutations in lexicographic one-line order. Single threaded and
/// unguarded; see [`enumerate_hex_permutations`] for the guarded variant.
pub struct HexPermIter {
    engine: HexPermEngine,
}

impl HexPermIter {
    pub fn new(num_dots: usize) -> Result<Self, SearchError> {
        Ok(HexPermIter { engine: HexPermEngine::new(num_dots, None)? })
    }

    pub fn nodes(&self) -> u64 {
        self.engine.nodes
    }
}

impl Iterator for HexPermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.engine
            .advance()
            .expect("unbudgeted engine")
            .map(|image| Permutation::new(image).expect("bijection by construction"))
    }
}

fn validate(num_dots: usize, opts: &SearchOptions) -> Result<(), SearchError> {
    if num_dots == 0 {
        return Err(SearchError::EmptySearch);
    }
    if num_dots > HEXPERM_DOTS_LIMIT {
        return Err(SearchError::StructuralLimit {
            what: "dot count",
            given: num_dots,
            limit: HEXPERM_DOTS_LIMIT,
        });
    }
    if num_dots > HEXPERM_DOTS_GUARD && opts.node_budget.is_none() {
        return Err(SearchError::GuardExceeded {
            what: "dot count",
            given: num_dots,
            limit: HEXPERM_DOTS_GUARD,
        });
    }
    Ok(())
}

/// Valid placements for the first `depth` columns, plus the node count of
/// the probe pass itself.
fn lex_prefixes(num_dots: usize, depth: usize) -> (Vec<Vec<usize>>, u64) {
    let mut out = Vec::new();
    let mut scratch = HexPermEngine::new(num_dots, None).expect("validated by caller");
    fn rec(engine: &mut HexPermEngine, depth: usize, out: &mut Vec<Vec<usize>>) {
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

/// Counts hexagonal permutations with `num_dots` dots.
///
/// Even dot counts return zero immediately when `opts.odd_shortcut` is on;
/// with the shortcut off the full (provably futile) search runs, which is
/// the exhaustive validation mode.
pub fn count_hex_permutations(
    num_dots: usize,
    opts: &SearchOptions,
) -> Result<CountResult, SearchError> {
    let start = Instant::now();
    validate(num_dots, opts)?;
    if num_dots % 2 == 0 && opts.odd_shortcut {
        return Ok(CountResult {
            num_dots,
            count: 0,
            nodes: 0,
            elapsed: start.elapsed(),
        });
    }
    let budget = opts.node_budget.map(|limit| Arc::new(Budget::new(limit)));
    let (tasks, probe_nodes) = lex_prefixes(num_dots, 2.min(num_dots));
    if let Some(b) = &budget {
        b.charge(probe_nodes)?;
    }
    let results = run_ordered(&tasks, opts.workers, |prefix| {
        let mut engine = HexPermEngine::with_prefix(num_dots, prefix, budget.clone())?
            .expect("prefixes are pre-validated");
        let mut count = 0u64;
        while engine.advance()?.is_some() {
            count += 1;
        }
        Ok((count, engine.nodes))
    });
    let mut count = 0u64;
    let mut nodes = probe_nodes;
    for r in results {
        let (c, n) = r?;
        count += c;
        nodes += n;
    }
    if num_dots % 2 == 0 {
        assert_eq!(count, 0, "even-size hexagonal permutation found; kernel inconsistent");
    }
    Ok(CountResult {
        num_dots,
        count,
        nodes,
        elapsed: start.elapsed(),
    })
}

/// Every hexagonal permutation with `num_dots` dots, lexicographically
/// sorted, enumerated with the same split-and-merge scheme as the counter.
pub fn enumerate_hex_permutations(
    num_dots: usize,
    opts: &SearchOptions,
) -> Result<Vec<Permutation>, SearchError> {
    validate(num_dots, opts)?;
    if num_dots % 2 == 0 && opts.odd_shortcut {
        return Ok(Vec::new());
    }
    let budget = opts.node_budget.map(|limit| Arc::new(Budget::new(limit)));
    let (tasks, probe_nodes) = lex_prefixes(num_dots, 2.min(num_dots));
    if let Some(b) = &budget {
        b.charge(probe_nodes)?;
    }
    let results = run_ordered(&tasks, opts.workers, |prefix| {
        let mut engine = HexPermEngine::with_prefix(num_dots, prefix, budget.clone())?
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
    if num_dots % 2 == 0 {
        assert!(merged.is_empty(), "even-size hexagonal permutation found; kernel inconsistent");
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Oracle: filter all n! permutations by the hexagonal permutation
    /// property checked through the configuration verifier.
    fn oracle_count(num_dots: usize) -> u64 {
        (0..num_dots)
            .permutations(num_dots)
            .filter(|image| {
                Permutation::new(image.clone())
                    .unwrap()
                    .to_config()
                    .is_hexagonal_permutation()
            })
            .count() as u64
    }

    #[test]
    fn counts_match_oracle_up_to_nine_dots() {
        let opts = SearchOptions { odd_shortcut: false, ..SearchOptions::default() };
        for num_dots in 1..=9 {
            let got = count_hex_permutations(num_dots, &opts).unwrap();
            assert_eq!(got.count, oracle_count(num_dots), "{num_dots} dots");
        }
    }

    #[test]
    fn known_odd_counts() {
        let opts = SearchOptions::default();
        let expected = [(1, 1u64), (3, 2), (5, 6), (7, 28), (9, 244), (11, 2544)];
        for (num_dots, count) in expected {
            assert_eq!(count_hex_permutations(num_dots, &opts).unwrap().count, count);
        }
    }

    #[test]
    fn even_counts_are_zero_with_and_without_shortcut() {
        let shortcut = SearchOptions::default();
        let full = SearchOptions { odd_shortcut: false, ..SearchOptions::default() };
        for num_dots in [2, 4, 6, 8] {
            let fast = count_hex_permutations(num_dots, &shortcut).unwrap();
            assert_eq!((fast.count, fast.nodes), (0, 0));
            let slow = count_hex_permutations(num_dots, &full).unwrap();
            assert_eq!(slow.count, 0);
            assert!(slow.nodes > 0, "validation run actually searched");
        }
    }

    #[test]
    fn enumeration_agrees_with_count_and_verifier() {
        let opts = SearchOptions::default();
        for num_dots in [1usize, 3, 5, 7, 9] {
            let perms = enumerate_hex_permutations(num_dots, &opts).unwrap();
            assert_eq!(perms.len() as u64, count_hex_permutations(num_dots, &opts).unwrap().count);
            for p in &perms {
                assert!(p.to_config().is_hexagonal_permutation());
            }
            let streamed: Vec<_> = HexPermIter::new(num_dots).unwrap().collect();
            assert_eq!(streamed, perms);
        }
    }

    #[test]
    fn worker_counts_agree() {
        let seq = SearchOptions::default();
        let par = SearchOptions::with_workers(8);
        let a = count_hex_permutations(11, &seq).unwrap();
        let b = count_hex_permutations(11, &par).unwrap();
        assert_eq!((a.count, a.nodes), (b.count, b.nodes));
        assert_eq!(
            enumerate_hex_permutations(9, &seq).unwrap(),
            enumerate_hex_permutations(9, &par).unwrap()
        );
    }

    #[test]
    fn guard_and_budget() {
        assert!(matches!(
            count_hex_permutations(21, &SearchOptions::default()),
            Err(SearchError::GuardExceeded { .. })
        ));
        let tiny = SearchOptions { node_budget: Some(5), ..SearchOptions::default() };
        assert_eq!(
            count_hex_permutations(9, &tiny),
            Err(SearchError::BudgetExceeded { budget: 5 })
        );
        assert!(matches!(
            count_hex_permutations(0, &SearchOptions::default()),
            Err(SearchError::EmptySearch)
        ));
    }
}
