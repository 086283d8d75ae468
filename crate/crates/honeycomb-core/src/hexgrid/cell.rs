use std::cmp::Ordering;
use std::fmt;

/// A lattice position in the square-grid representation of the hexagonal
/// grid.
///
/// `col` increases East and `row` increases North. Each cell has six
/// neighbours: the four edge neighbours plus the cells across its
/// North-East and South-West corners, so `(col + 1, row + 1)` and
/// `(col - 1, row - 1)` are adjacent. Lines of constant `col - row` are
/// the standard diagonals (they run North-East to South-West in the
/// hexagonal picture).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub col: i32,
    pub row: i32,
}

/// The six neighbour offsets `(dcol, drow)`, counter-clockwise from East.
pub const NEIGHBOR_OFFSETS: [(i32, i32); 6] =
    [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];

impl Cell {
    pub const fn new(col: i32, row: i32) -> Self {
        Cell { col, row }
    }

    /// Standard-diagonal index `col - row`; constant along each NE-SW line.
    pub const fn diag(self) -> i32 {
        self.col - self.row
    }

    pub fn translated(self, dcol: i32, drow: i32) -> Cell {
        Cell::new(self.col + dcol, self.row + drow)
    }

    pub fn neighbors(self) -> [Cell; 6] {
        NEIGHBOR_OFFSETS.map(|(dc, dr)| self.translated(dc, dr))
    }
}

// Cells order by (row, col); this is the output order used everywhere.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.col, self.row)
    }
}

/// Graph distance between two hexagons under the six-neighbour adjacency.
///
/// Closed form: with `d1 = a.col - b.col` and `d2 = a.row - b.row`, the
/// distance is `max(|d1|, |d2|)` when the offsets have the same sign
/// (the corner moves cover both axes at once) and `|d1| + |d2|` otherwise.
pub fn hex_distance(a: Cell, b: Cell) -> u32 {
    let d1 = a.col - b.col;
    let d2 = a.row - b.row;
    if d1 as i64 * d2 as i64 >= 0 {
        d1.abs().max(d2.abs()) as u32
    } else {
        (d1.abs() + d2.abs()) as u32
    }
}

/// The indices of the three lines through a cell, one per family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineIndices {
    pub row: i32,
    pub col: i32,
    pub diag: i32,
}

/// Returns the row, column and standard-diagonal index of `x`.
pub fn line_indices(x: Cell) -> LineIndices {
    LineIndices {
        row: x.row,
        col: x.col,
        diag: x.diag(),
    }
}
