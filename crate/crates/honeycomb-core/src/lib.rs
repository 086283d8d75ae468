//! Hexagonal-grid distinct-difference combinatorics.
//!
//! Verifiers and exact enumerators for hexagonal permutations, Costas
//! arrays, honeycomb arrays and non-attacking brook placements, together
//! with file formats and deterministic renderings of the configurations.

pub mod config;
pub mod hexgrid;
pub mod search;

pub use config::{ConfigError, DotConfiguration, HoneycombArray, Permutation};
pub use hexgrid::{hex_distance, line_indices, Cell, LineIndices, Region, Symmetry, TriOrientation};
