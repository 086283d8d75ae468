//! Coordinates, distance, regions and the point group of the hexagonal
//! grid in its square-grid representation.

mod cell;
mod region;
mod symmetry;

pub use cell::{hex_distance, line_indices, Cell, LineIndices, NEIGHBOR_OFFSETS};
pub use region::{Region, RegionError, TriOrientation};
pub use symmetry::{Symmetry, IDENTITY, REFLECTION, ROTATION};
