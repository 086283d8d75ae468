use std::collections::BTreeSet;

use crate::config::{DotConfiguration, HoneycombArray};
use crate::hexgrid::{Cell, Region, Symmetry};

use super::{SearchError, SearchOptions};

/// Row/column/diagonal masks use `u64`, so sphere line indices must fit
/// `2r + 1 <= 64`.
pub const SYMMETRIC_RADIUS_LIMIT: u32 = 31;

/// Difference bitset over the window `[-2r, 2r]^2`.
struct DiffTable {
    side: usize,
    radius: i32,
    bits: Vec<u64>,
}

impl DiffTable {
    fn new(radius: u32) -> Self {
        let side = 4 * radius as usize + 1;
        DiffTable {
            side,
            radius: radius as i32,
            bits: vec![0; (side * side + 63) / 64],
        }
    }

    fn index(&self, dc: i32, dr: i32) -> usize {
        let x = (dc + 2 * self.radius) as usize;
        let y = (dr + 2 * self.radius) as usize;
        y * self.side + x
    }

    fn test_and_set(&mut self, dc: i32, dr: i32) -> bool {
        let idx = self.index(dc, dr);
        let (word, bit) = (idx / 64, idx % 64);
        if self.bits[word] & (1 << bit) != 0 {
            return false;
        }
        self.bits[word] |= 1 << bit;
        true
    }

    fn clear(&mut self, dc: i32, dr: i32) {
        let idx = self.index(dc, dr);
        self.bits[idx / 64] &= !(1 << (idx % 64));
    }
}

struct SymmetricSearch {
    radius: u32,
    target: usize,
    orbits: Vec<Vec<Cell>>,
    /// Total cell count of orbits from index i on.
    suffix: Vec<usize>,
    rows: u64,
    cols: u64,
    diags: u64,
    placed: Vec<Cell>,
    diffs: DiffTable,
    found: Vec<DotConfiguration>,
    nodes: u64,
    budget_limit: Option<u64>,
}

impl SymmetricSearch {
    fn mask_bit(&self, value: i32) -> u64 {
        1 << (value + self.radius as i32) as u32
    }

    /// Adds every cell of the orbit, with rollback on any line or
    /// difference collision. Returns whether the orbit fit.
    fn try_include(&mut self, orbit_idx: usize) -> bool {
        let orbit = &self.orbits[orbit_idx];
        let before_dots = self.placed.len();
        let (saved_rows, saved_cols, saved_diags) = (self.rows, self.cols, self.diags);
        let mut added_diffs: Vec<(i32, i32)> = Vec::new();
        let mut ok = true;
        'cells: for &cell in orbit {
            let (rb, cb, db) = (
                self.mask_bit(cell.row),
                self.mask_bit(cell.col),
                self.mask_bit(cell.diag()),
            );
            if self.rows & rb != 0 || self.cols & cb != 0 || self.diags & db != 0 {
                ok = false;
                break 'cells;
            }
            self.rows |= rb;
            self.cols |= cb;
            self.diags |= db;
            for &other in &self.placed {
                let (dc, dr) = (cell.col - other.col, cell.row - other.row);
                for (a, b) in [(dc, dr), (-dc, -dr)] {
                    if !self.diffs.test_and_set(a, b) {
                        ok = false;
                        break 'cells;
                    }
                    added_diffs.push((a, b));
                }
            }
            self.placed.push(cell);
        }
        if !ok {
            for &(a, b) in &added_diffs {
                self.diffs.clear(a, b);
            }
            self.placed.truncate(before_dots);
            self.rows = saved_rows;
            self.cols = saved_cols;
            self.diags = saved_diags;
        }
        ok
    }

    fn undo_include(&mut self, orbit_idx: usize) {
        let orbit_len = self.orbits[orbit_idx].len();
        let keep = self.placed.len() - orbit_len;
        for k in keep..self.placed.len() {
            let cell = self.placed[k];
            self.rows &= !self.mask_bit(cell.row);
            self.cols &= !self.mask_bit(cell.col);
            self.diags &= !self.mask_bit(cell.diag());
            for other_idx in 0..k {
                let other = self.placed[other_idx];
                let (dc, dr) = (cell.col - other.col, cell.row - other.row);
                self.diffs.clear(dc, dr);
                self.diffs.clear(-dc, -dr);
            }
        }
        self.placed.truncate(keep);
    }

    fn recurse(&mut self, orbit_idx: usize) -> Result<(), SearchError> {
        if self.placed.len() == self.target {
            self.found.push(DotConfiguration::new(self.placed.iter().copied()));
            return Ok(());
        }
        if orbit_idx == self.orbits.len()
            || self.placed.len() + self.suffix[orbit_idx] < self.target
        {
            return Ok(());
        }
        self.nodes += 1;
        if let Some(limit) = self.budget_limit {
            if self.nodes > limit {
                return Err(SearchError::BudgetExceeded { budget: limit });
            }
        }
        if self.placed.len() + self.orbits[orbit_idx].len() <= self.target
            && self.try_include(orbit_idx)
        {
            self.recurse(orbit_idx + 1)?;
            self.undo_include(orbit_idx);
        }
        self.recurse(orbit_idx + 1)
    }
}

/// Orbits of the order-6 corner-reflection subgroup on the cells of the
/// origin-centred Lee sphere of the given radius, sorted by smallest
/// member.
fn sphere_orbits(radius: u32) -> Vec<Vec<Cell>> {
    let group = Symmetry::sphere_subgroup();
    let cells = Region::lee_sphere(Cell::new(0, 0), radius).cells();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut orbits = Vec::new();
    for cell in cells {
        if seen.contains(&cell) {
            continue;
        }
        let orbit: BTreeSet<Cell> = group.iter().map(|g| g.apply(cell)).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    orbits
}

/// Exhaustively finds, up to symmetry, every honeycomb array of the given
/// radius that is invariant under the order-6 subgroup fixing its sphere
/// centre.
///
/// Such an array is a union of group orbits of sphere cells, so the search
/// branches over whole orbits instead of single dots; occupancy masks for
/// the three line families and an incremental difference table prune the
/// tree. Results are reduced to canonical point-group representatives.
pub fn search_symmetric_honeycomb(
    radius: u32,
    opts: &SearchOptions,
) -> Result<Vec<HoneycombArray>, SearchError> {
    if radius > SYMMETRIC_RADIUS_LIMIT {
        return Err(SearchError::StructuralLimit {
            what: "radius",
            given: radius as usize,
            limit: SYMMETRIC_RADIUS_LIMIT as usize,
        });
    }
    let orbits = sphere_orbits(radius);
    let mut suffix = vec![0usize; orbits.len() + 1];
    for i in (0..orbits.len()).rev() {
        suffix[i] = suffix[i + 1] + orbits[i].len();
    }
    let mut search = SymmetricSearch {
        radius,
        target: 2 * radius as usize + 1,
        orbits,
        suffix,
        rows: 0,
        cols: 0,
        diags: 0,
        placed: Vec::new(),
        diffs: DiffTable::new(radius),
        found: Vec::new(),
        nodes: 0,
        budget_limit: opts.node_budget,
    };
    search.recurse(0)?;
    let classes: BTreeSet<DotConfiguration> =
        search.found.iter().map(|cfg| cfg.canonicalize()).collect();
    Ok(classes
        .into_iter()
        .map(|cfg| {
            HoneycombArray::from_config(cfg)
                .expect("symmetric search emits verified honeycomb arrays")
        })
        .collect())
}
