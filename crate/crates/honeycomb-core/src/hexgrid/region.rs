use std::collections::BTreeSet;

use thiserror::Error;

use super::cell::{hex_distance, Cell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("staircase index {index} out of range for size {size} (need 0 <= index <= size - 1)")]
    StaircaseIndex { index: u32, size: u32 },
    #[error("region size must be at least 1")]
    EmptySize,
}

/// Orientation of a tricentred Lee sphere: the triangle formed by the three
/// pairwise adjacent sphere centres points North (`Up`) or South (`Down`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriOrientation {
    Up,
    Down,
}

/// A finite named cell set in the square representation of the hexagonal
/// grid.
///
/// Lee spheres are anchored at their centre cell; staircases, triangular
/// boards and tricentred Lee spheres at the South-West corner of their
/// bounding square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    LeeSphere {
        center: Cell,
        radius: u32,
    },
    TricentredLeeSphere {
        anchor: Cell,
        radius: u32,
        orientation: TriOrientation,
    },
    Staircase {
        index: u32,
        size: u32,
        anchor: Cell,
    },
    TriangularBoard {
        width: u32,
        anchor: Cell,
    },
    Custom {
        cells: Vec<Cell>,
    },
}

impl Region {
    pub fn lee_sphere(center: Cell, radius: u32) -> Region {
        Region::LeeSphere { center, radius }
    }

    /// Union of three radius-`radius` Lee spheres with pairwise adjacent
    /// centres. With anchor `a` the centres are `a + (r, r)` plus, for
    /// `Up`, `a + (r+1, r)` and `a + (r+1, r+1)`; for `Down`, `a + (r, r+1)`
    /// and `a + (r+1, r+1)`.
    pub fn tricentred(anchor: Cell, radius: u32, orientation: TriOrientation) -> Region {
        Region::TricentredLeeSphere { anchor, radius, orientation }
    }

    /// The intersection of an `size x size` square (SW corner at `anchor`)
    /// with `size` adjacent standard diagonals: cells `(c, r)` with
    /// `0 <= c - c0 <= size-1`, `0 <= r - r0 <= size-1` and
    /// `-(size-1-index) <= (c-c0) - (r-r0) <= index`.
    pub fn staircase(index: u32, size: u32, anchor: Cell) -> Result<Region, RegionError> {
        if size == 0 {
            return Err(RegionError::EmptySize);
        }
        if index >= size {
            return Err(RegionError::StaircaseIndex { index, size });
        }
        Ok(Region::Staircase { index, size, anchor })
    }

    pub fn triangular_board(width: u32, anchor: Cell) -> Result<Region, RegionError> {
        if width == 0 {
            return Err(RegionError::EmptySize);
        }
        Ok(Region::TriangularBoard { width, anchor })
    }

    pub fn custom<I: IntoIterator<Item = Cell>>(cells: I) -> Region {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        Region::Custom { cells: set.into_iter().collect() }
    }

    /// The three sphere centres of a tricentred Lee sphere.
    fn tricentre_centers(anchor: Cell, radius: u32, orientation: TriOrientation) -> [Cell; 3] {
        let r = radius as i32;
        let base = anchor.translated(r, r);
        let far = anchor.translated(r + 1, r + 1);
        let mid = match orientation {
            TriOrientation::Up => anchor.translated(r + 1, r),
            TriOrientation::Down => anchor.translated(r, r + 1),
        };
        [base, mid, far]
    }

    /// The cells of the region, sorted by (row, col).
    pub fn cells(&self) -> Vec<Cell> {
        let mut set = BTreeSet::new();
        match *self {
            Region::LeeSphere { center, radius } => {
                let r = radius as i32;
                for dr in -r..=r {
                    for dc in -r..=r {
                        let cell = center.translated(dc, dr);
                        if hex_distance(cell, center) <= radius {
                            set.insert(cell);
                        }
                    }
                }
            }
            Region::TricentredLeeSphere { anchor, radius, orientation } => {
                for c in Self::tricentre_centers(anchor, radius, orientation) {
                    set.extend(Region::lee_sphere(c, radius).cells());
                }
            }
            Region::Staircase { index, size, anchor } => {
                let n = size as i32;
                let i = index as i32;
                for dr in 0..n {
                    for dc in 0..n {
                        if dc - dr >= -(n - 1 - i) && dc - dr <= i {
                            set.insert(anchor.translated(dc, dr));
                        }
                    }
                }
            }
            Region::TriangularBoard { width, anchor } => {
                return Region::Staircase { index: 0, size: width, anchor }.cells();
            }
            Region::Custom { ref cells } => return cells.clone(),
        }
        set.into_iter().collect()
    }

    pub fn size(&self) -> usize {
        self.cells().len()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        match *self {
            Region::LeeSphere { center, radius } => hex_distance(cell, center) <= radius,
            Region::TricentredLeeSphere { anchor, radius, orientation } => {
                Self::tricentre_centers(anchor, radius, orientation)
                    .iter()
                    .any(|&c| hex_distance(cell, c) <= radius)
            }
            Region::Staircase { index, size, anchor } => {
                let n = size as i32;
                let i = index as i32;
                let dc = cell.col - anchor.col;
                let dr = cell.row - anchor.row;
                (0..n).contains(&dc)
                    && (0..n).contains(&dr)
                    && dc - dr >= -(n - 1 - i)
                    && dc - dr <= i
            }
            Region::TriangularBoard { width, anchor } => {
                Region::Staircase { index: 0, size: width, anchor }.contains_cell(cell)
            }
            Region::Custom { ref cells } => cells.binary_search(&cell).is_ok(),
        }
    }

    /// True iff every given dot lies in this region, at absolute coordinates.
    pub fn contains_all(&self, dots: &[Cell]) -> bool {
        dots.iter().all(|&d| self.contains_cell(d))
    }

    /// True iff some translate of this region contains every given dot.
    pub fn contains_translate_of(&self, dots: &[Cell]) -> bool {
        if dots.is_empty() {
            return true;
        }
        let cells = self.cells();
        if dots.len() > cells.len() {
            return false;
        }
        let (rc0, rc1) = min_max(cells.iter().map(|c| c.col));
        let (rr0, rr1) = min_max(cells.iter().map(|c| c.row));
        let (dc0, dc1) = min_max(dots.iter().map(|c| c.col));
        let (dr0, dr1) = min_max(dots.iter().map(|c| c.row));
        // A translate by t covers the dots iff every dot minus t is a region
        // cell, so t is confined to the bounding-box offset ranges below.
        for tc in (dc1 - rc1)..=(dc0 - rc0) {
            for tr in (dr1 - rr1)..=(dr0 - rr0) {
                if dots.iter().all(|d| self.contains_cell(d.translated(-tc, -tr))) {
                    return true;
                }
            }
        }
        false
    }

    pub fn translated(&self, dcol: i32, drow: i32) -> Region {
        match *self {
            Region::LeeSphere { center, radius } => Region::LeeSphere {
                center: center.translated(dcol, drow),
                radius,
            },
            Region::TricentredLeeSphere { anchor, radius, orientation } => {
                Region::TricentredLeeSphere {
                    anchor: anchor.translated(dcol, drow),
                    radius,
                    orientation,
                }
            }
            Region::Staircase { index, size, anchor } => Region::Staircase {
                index,
                size,
                anchor: anchor.translated(dcol, drow),
            },
            Region::TriangularBoard { width, anchor } => Region::TriangularBoard {
                width,
                anchor: anchor.translated(dcol, drow),
            },
            Region::Custom { ref cells } => Region::Custom {
                cells: cells.iter().map(|c| c.translated(dcol, drow)).collect(),
            },
        }
    }
}

fn min_max<I: Iterator<Item = i32>>(mut it: I) -> (i32, i32) {
    let first = it.next().expect("non-empty");
    it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    /// BFS ball oracle: all cells reachable from `center` in at most
    /// `radius` steps.
    fn bfs_ball(center: Cell, radius: u32) -> BTreeSet<Cell> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(center);
        queue.push_back((center, 0u32));
        while let Some((cur, d)) = queue.pop_front() {
            if d == radius {
                continue;
            }
            for nb in cur.neighbors() {
                if seen.insert(nb) {
                    queue.push_back((nb, d + 1));
                }
            }
        }
        seen
    }

    fn span<I: Iterator<Item = i32>>(it: I) -> usize {
        let values: BTreeSet<i32> = it.collect();
        values.len()
    }

    #[test]
    fn lee_sphere_radius_two_matches_bfs_ball() {
        let center = Cell::new(0, 0);
        let sphere = Region::lee_sphere(center, 2);
        let cells: BTreeSet<Cell> = sphere.cells().into_iter().collect();
        assert_eq!(cells, bfs_ball(center, 2));
        assert_eq!(cells.len(), 19);
        assert_eq!(span(cells.iter().map(|c| c.row)), 5);
        assert_eq!(span(cells.iter().map(|c| c.col)), 5);
        assert_eq!(span(cells.iter().map(|c| c.diag())), 5);
    }

    #[test]
    fn lee_sphere_sizes_match_closed_form() {
        for r in 0..=30u32 {
            let sphere = Region::lee_sphere(Cell::new(3, -2), r);
            assert_eq!(sphere.size() as u32, 3 * r * r + 3 * r + 1, "radius {r}");
        }
    }

    #[test]
    fn tricentred_sizes_and_spans() {
        for orientation in [TriOrientation::Up, TriOrientation::Down] {
            for r in 0..=30u32 {
                let reg = Region::tricentred(Cell::new(0, 0), r, orientation);
                assert_eq!(reg.size() as u32, 3 * (r + 1) * (r + 1), "radius {r}");
            }
            let cells = Region::tricentred(Cell::new(0, 0), 2, orientation).cells();
            assert_eq!(span(cells.iter().map(|c| c.row)), 6);
            assert_eq!(span(cells.iter().map(|c| c.col)), 6);
            assert_eq!(span(cells.iter().map(|c| c.diag())), 6);
        }
    }

    #[test]
    fn tricentred_radius_zero_is_three_adjacent_cells() {
        let cells = Region::tricentred(Cell::new(0, 0), 0, TriOrientation::Down).cells();
        assert_eq!(cells.len(), 3);
        for a in &cells {
            for b in &cells {
                if a != b {
                    assert_eq!(hex_distance(*a, *b), 1);
                }
            }
        }
    }

    #[test]
    fn staircase_matches_defining_inequalities() {
        let cells = Region::staircase(0, 3, Cell::new(0, 0)).unwrap().cells();
        let expected = vec![
            Cell::new(0, 0),
            Cell::new(0, 1),
            Cell::new(1, 1),
            Cell::new(0, 2),
            Cell::new(1, 2),
            Cell::new(2, 2),
        ];
        assert_eq!(cells, expected);
    }

    #[test]
    fn staircase_sizes_match_closed_form() {
        for n in 1..=20u32 {
            for i in 0..n {
                let reg = Region::staircase(i, n, Cell::new(0, 0)).unwrap();
                let expected = n * n - i * (i + 1) / 2 - (n - 1 - i) * (n - i) / 2;
                assert_eq!(reg.size() as u32, expected, "i={i} n={n}");
            }
        }
    }

    #[test]
    fn staircase_specialisations() {
        // index 0 is the triangular board.
        assert_eq!(
            Region::staircase(0, 5, Cell::new(1, 1)).unwrap().cells(),
            Region::triangular_board(5, Cell::new(1, 1)).unwrap().cells()
        );
        // index r at size 2r+1 is a Lee sphere of radius r.
        for r in 0..=6u32 {
            let stair = Region::staircase(r, 2 * r + 1, Cell::new(0, 0)).unwrap();
            let sphere = Region::lee_sphere(Cell::new(r as i32, r as i32), r);
            assert_eq!(stair.cells(), sphere.cells(), "radius {r}");
        }
        // indices r and r+1 at size 2r+2 are the two tricentred spheres.
        for r in 0..=6u32 {
            let down = Region::staircase(r, 2 * r + 2, Cell::new(0, 0)).unwrap();
            let up = Region::staircase(r + 1, 2 * r + 2, Cell::new(0, 0)).unwrap();
            assert_eq!(
                down.cells(),
                Region::tricentred(Cell::new(0, 0), r, TriOrientation::Down).cells(),
                "down, radius {r}"
            );
            assert_eq!(
                up.cells(),
                Region::tricentred(Cell::new(0, 0), r, TriOrientation::Up).cells(),
                "up, radius {r}"
            );
        }
    }

    #[test]
    fn staircase_rejects_out_of_range_index() {
        assert!(Region::staircase(3, 3, Cell::new(0, 0)).is_err());
        assert!(Region::staircase(0, 0, Cell::new(0, 0)).is_err());
        assert!(Region::triangular_board(0, Cell::new(0, 0)).is_err());
    }

    #[test]
    fn contains_cell_agrees_with_cell_list() {
        let regions = [
            Region::lee_sphere(Cell::new(1, -1), 3),
            Region::tricentred(Cell::new(0, 0), 2, TriOrientation::Up),
            Region::staircase(2, 5, Cell::new(-1, 2)).unwrap(),
            Region::triangular_board(4, Cell::new(0, 0)).unwrap(),
            Region::custom([Cell::new(0, 0), Cell::new(5, 5)]),
        ];
        for reg in &regions {
            let cells: BTreeSet<Cell> = reg.cells().into_iter().collect();
            for r in -8..=8 {
                for c in -8..=8 {
                    let cell = Cell::new(c, r);
                    assert_eq!(reg.contains_cell(cell), cells.contains(&cell), "{reg:?} {cell}");
                }
            }
        }
    }

    #[test]
    fn translate_search_finds_shifted_fit() {
        let board = Region::triangular_board(3, Cell::new(0, 0)).unwrap();
        // Not contained at absolute coordinates, but a translate fits.
        let dots = [Cell::new(10, 11), Cell::new(11, 12)];
        assert!(!board.contains_all(&dots));
        assert!(board.contains_translate_of(&dots));
        // Two cells on one row never fit a width-1 board.
        let row_pair = [Cell::new(0, 0), Cell::new(1, 0)];
        assert!(!Region::triangular_board(1, Cell::new(0, 0))
            .unwrap()
            .contains_translate_of(&row_pair));
    }
}
