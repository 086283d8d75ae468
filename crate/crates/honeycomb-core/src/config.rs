//! Dot configurations and their defining properties: hexagonal
//! permutation, distinct differences, honeycomb; plus canonical forms
//! under the 12-element point group.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::hexgrid::{hex_distance, Cell, Region, Symmetry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("configuration is not a hexagonal permutation")]
    NotHexagonalPermutation,
    #[error("value {value} out of range for a permutation of length {len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("value {value} appears more than once")]
    RepeatedValue { value: usize },
}

/// A finite set of distinct cells, stored sorted by (row, col) and kept in
/// translation-normal form: the minimum row and minimum column are both 0.
/// Equality is therefore set equality up to translation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DotConfiguration {
    dots: Vec<Cell>,
}

impl DotConfiguration {
    /// Builds a configuration from any collection of cells. Duplicates
    /// collapse (set semantics) and the result is translation-normalized.
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return DotConfiguration { dots: Vec::new() };
        }
        let min_col = set.iter().map(|c| c.col).min().unwrap();
        let min_row = set.iter().map(|c| c.row).min().unwrap();
        let dots = set
            .into_iter()
            .map(|c| c.translated(-min_col, -min_row))
            .collect();
        DotConfiguration { dots }
    }

    pub fn dots(&self) -> &[Cell] {
        &self.dots
    }

    pub fn len(&self) -> usize {
        self.dots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    /// Image under a point-group element, re-normalized.
    pub fn apply_symmetry(&self, g: &Symmetry) -> DotConfiguration {
        DotConfiguration::new(self.dots.iter().map(|&c| g.apply(c)))
    }

    fn line_values(&self) -> (Vec<i32>, Vec<i32>, Vec<i32>) {
        let rows = self.dots.iter().map(|c| c.row).collect();
        let cols = self.dots.iter().map(|c| c.col).collect();
        let diags = self.dots.iter().map(|c| c.diag()).collect();
        (rows, cols, diags)
    }

    /// Tests the hexagonal permutation property: in each of the three line
    /// families the occupied indices are distinct and consecutive. On
    /// success returns the staircase index `i` for which the dots fit
    /// `Staircase(i, n, anchor)`; in normal form this is the maximum
    /// diagonal index among the dots.
    pub fn hexagonal_permutation_index(&self) -> Option<u32> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        let (rows, cols, diags) = self.line_values();
        for values in [&rows, &cols, &diags] {
            let distinct: BTreeSet<i32> = values.iter().copied().collect();
            if distinct.len() != n {
                return None;
            }
            let lo = *distinct.iter().next().unwrap();
            let hi = *distinct.iter().last().unwrap();
            if hi - lo != n as i32 - 1 {
                return None;
            }
        }
        let max_diag = diags.iter().copied().max().unwrap();
        // Normal form puts the minimum column and row at 0, so the anchor
        // offset term vanishes and i is the top diagonal index.
        debug_assert!(max_diag >= 0 && (max_diag as usize) < n);
        Some(max_diag as u32)
    }

    pub fn is_hexagonal_permutation(&self) -> bool {
        self.hexagonal_permutation_index().is_some()
    }

    /// Tests the distinct differences property: the `n(n-1)` ordered
    /// difference vectors between distinct dots are pairwise distinct.
    /// Differences are taken in square coordinates; the map to the
    /// hexagonal grid is linear, so this is equivalent to the hexagonal
    /// statement.
    pub fn is_distinct_difference(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut seen: HashSet<(i32, i32)> = HashSet::with_capacity(self.len() * self.len());
        for (k, a) in self.dots.iter().enumerate() {
            for b in &self.dots[k + 1..] {
                let d = (a.col - b.col, a.row - b.row);
                // A repeat of d, or of -d, collides with one of the two
                // ordered differences this pair contributes.
                if seen.contains(&d) || seen.contains(&(-d.0, -d.1)) {
                    return false;
                }
                seen.insert(d);
            }
        }
        true
    }

    /// Radius and sphere centre iff the configuration is both a hexagonal
    /// permutation and a distinct difference configuration.
    ///
    /// Whenever both properties hold, the dot count is odd and the dots fit
    /// a Lee sphere of radius `(n-1)/2`; a violation would mean the
    /// verifiers disagree with each other and is treated as an internal
    /// error, not a negative result.
    pub fn honeycomb_radius(&self) -> Option<(u32, Cell)> {
        let i = self.hexagonal_permutation_index()?;
        if !self.is_distinct_difference() {
            return None;
        }
        let n = self.len();
        assert!(
            n % 2 == 1 && i as usize == (n - 1) / 2,
            "hexagonal permutation with n={n} has staircase index {i}, expected a centred odd span"
        );
        let r = ((n - 1) / 2) as u32;
        let center = Cell::new(r as i32, r as i32);
        debug_assert!(self.dots.iter().all(|&d| hex_distance(d, center) <= r));
        Some((r, center))
    }

    /// The region `R ∩ C ∩ D` cut out by the occupied rows, columns and
    /// diagonals: a staircase anchored at the origin in normal form.
    pub fn bounding_region(&self) -> Result<Region, ConfigError> {
        let i = self
            .hexagonal_permutation_index()
            .ok_or(ConfigError::NotHexagonalPermutation)?;
        Ok(Region::staircase(i, self.len() as u32, Cell::new(0, 0))
            .expect("index in range by construction"))
    }

    /// Lexicographically smallest translation-normalized image over all 12
    /// point-group elements. Idempotent, and constant on symmetry orbits.
    pub fn canonicalize(&self) -> DotConfiguration {
        Symmetry::all()
            .iter()
            .map(|g| self.apply_symmetry(g))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Number of point-group elements whose action, followed by
    /// translation normalization, fixes this configuration. Divides 12.
    pub fn automorphism_group_order(&self) -> usize {
        Symmetry::all()
            .iter()
            .filter(|g| &self.apply_symmetry(g) == self)
            .count()
    }
}

impl fmt::Display for DotConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.dots.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// A permutation of `{0..n-1}` in one-line notation, read as the dot set
/// `{(col = i, row = p[i])}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, ConfigError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(ConfigError::ValueOutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(ConfigError::RepeatedValue { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn to_config(&self) -> DotConfiguration {
        DotConfiguration::new(
            self.image
                .iter()
                .enumerate()
                .map(|(i, &v)| Cell::new(i as i32, v as i32)),
        )
    }

    /// Costas test: one dot per row and column (by construction) with all
    /// pairwise difference vectors distinct.
    pub fn is_costas(&self) -> bool {
        !self.is_empty() && self.to_config().is_distinct_difference()
    }

    /// One-line notation, e.g. `0 2 1`.
    pub fn one_line(&self) -> String {
        self.image
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// A hexagonal permutation that is also a distinct difference
/// configuration: `2r + 1` dots inside a Lee sphere of radius `r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HoneycombArray {
    base: DotConfiguration,
    radius: u32,
    center: Cell,
}

impl HoneycombArray {
    /// Checks both defining properties; `None` if either fails.
    pub fn from_config(cfg: DotConfiguration) -> Option<Self> {
        let (radius, center) = cfg.honeycomb_radius()?;
        Some(HoneycombArray { base: cfg, radius, center })
    }

    pub fn base(&self) -> &DotConfiguration {
        &self.base
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn center(&self) -> Cell {
        self.center
    }
}
