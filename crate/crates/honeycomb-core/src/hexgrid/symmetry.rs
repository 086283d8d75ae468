use super::cell::Cell;

/// A lattice automorphism of the hexagonal grid in square coordinates:
/// a unimodular 2x2 integer map acting on `(col, row)`.
///
/// The full point group has 12 elements, generated by the 60-degree
/// rotation `M: (c, r) -> (c - r, c)` and the reflection in a standard
/// diagonal `F: (c, r) -> (r, c)`. Labels 0..5 are the rotations `M^k`;
/// labels 6..11 are `M^(k-6) * F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    // (col', row') = (a*col + b*row, c*col + d*row)
    m: [i32; 4],
}

pub const IDENTITY: Symmetry = Symmetry { m: [1, 0, 0, 1] };

/// Rotation by 60 degrees.
pub const ROTATION: Symmetry = Symmetry { m: [1, -1, 1, 0] };

/// Reflection in the standard diagonal through the origin (coordinate swap).
pub const REFLECTION: Symmetry = Symmetry { m: [0, 1, 1, 0] };

impl Symmetry {
    pub fn apply(&self, cell: Cell) -> Cell {
        Cell::new(
            self.m[0] * cell.col + self.m[1] * cell.row,
            self.m[2] * cell.col + self.m[3] * cell.row,
        )
    }

    /// `self.compose(other)` applies `other` first, then `self`.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        let a = self.m;
        let b = other.m;
        Symmetry {
            m: [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ],
        }
    }

    pub fn inverse(&self) -> Symmetry {
        // Unimodular, so the inverse is the adjugate up to determinant sign.
        let [a, b, c, d] = self.m;
        let det = a * d - b * c;
        debug_assert!(det == 1 || det == -1);
        Symmetry { m: [d * det, -b * det, -c * det, a * det] }
    }

    /// All 12 elements of the point group, indexed by label.
    pub fn all() -> [Symmetry; 12] {
        let mut out = [IDENTITY; 12];
        let mut rot = IDENTITY;
        for k in 0..6 {
            out[k] = rot;
            out[k + 6] = rot.compose(&REFLECTION);
            rot = ROTATION.compose(&rot);
        }
        out
    }

    /// The order-6 subgroup generated by the three reflections that fix
    /// opposite corners of an origin-centred Lee sphere:
    /// `{I, M^2, M^4, F, M^2 F, M^4 F}`.
    pub fn sphere_subgroup() -> [Symmetry; 6] {
        let all = Symmetry::all();
        [all[0], all[2], all[4], all[6], all[8], all[10]]
    }

    /// Position of this element in `Symmetry::all()`.
    pub fn label(&self) -> u8 {
        Symmetry::all()
            .iter()
            .position(|g| g == self)
            .expect("element of the point group") as u8
    }
}
