use crate::config::DotConfiguration;
use crate::hexgrid::Cell;

use super::SearchError;

/// Exact maximum for non-attacking brooks on a triangular board, with a
/// witness placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksResult {
    pub width: u32,
    pub max_count: u32,
    pub placement: DotConfiguration,
}

struct BrooksSolver {
    width: u32,
    used_cols: u64,
    used_diags: u64,
    current: Vec<Cell>,
    best: Vec<Cell>,
}

impl BrooksSolver {
    /// Branch and bound over rows of the board; row `r` has the cells
    /// `(c, r)` with `0 <= c <= r`. The bound is the plain remaining-rows
    /// bound: at most one brook fits in each unvisited row. Candidate
    /// cells are tried in column order before skipping the row, and only
    /// strictly better placements replace the incumbent, so the witness is
    /// deterministic.
    fn solve(&mut self, row: u32) {
        if self.current.len() as u32 + (self.width - row) <= self.best.len() as u32 {
            return;
        }
        if row == self.width {
            self.best = self.current.clone();
            return;
        }
        for col in 0..=row {
            let diag_bit = row - col; // diagonal index col - row, negated into 0..width
            if self.used_cols & (1 << col) == 0 && self.used_diags & (1 << diag_bit) == 0 {
                self.used_cols |= 1 << col;
                self.used_diags |= 1 << diag_bit;
                self.current.push(Cell::new(col as i32, row as i32));
                self.solve(row + 1);
                self.current.pop();
                self.used_cols &= !(1 << col);
                self.used_diags &= !(1 << diag_bit);
            }
        }
        self.solve(row + 1);
    }
}

/// Maximum number of non-attacking brooks on the triangular board of
/// width `w`, computed by exhaustive branch and bound.
pub fn max_brooks(width: u32) -> Result<BrooksResult, SearchError> {
    if width == 0 {
        return Err(SearchError::EmptySearch);
    }
    if width > 64 {
        return Err(SearchError::StructuralLimit {
            what: "board width",
            given: width as usize,
            limit: 64,
        });
    }
    let mut solver = BrooksSolver {
        width,
        used_cols: 0,
        used_diags: 0,
        current: Vec::new(),
        best: Vec::new(),
    };
    solver.solve(0);
    Ok(BrooksResult {
        width,
        max_count: solver.best.len() as u32,
        placement: DotConfiguration::new(solver.best),
    })
}
