use std::collections::BTreeSet;

use crate::config::{HoneycombArray, Permutation};

use super::costas::enumerate_costas;
use super::hexperm::count_hex_permutations;
use super::{SearchError, SearchOptions};

/// Honeycomb check for a verified Costas array: rows and columns are
/// already one-per-line, so the array lifts to a honeycomb array exactly
/// when the diagonal family works out, i.e. the displacements `p[i] - i`
/// are pairwise distinct and consecutive.
fn honeycomb_from_costas(p: &Permutation) -> Option<HoneycombArray> {
    let n = p.len() as i32;
    let mut seen = 0u64;
    let (mut lo, mut hi) = (i32::MAX, i32::MIN);
    for (i, &v) in p.image().iter().enumerate() {
        let diff = v as i32 - i as i32;
        let bit = (diff + n - 1) as u32;
        if seen & (1 << bit) != 0 {
            return None;
        }
        seen |= 1 << bit;
        lo = lo.min(diff);
        hi = hi.max(diff);
    }
    if hi - lo != n - 1 {
        return None;
    }
    // Re-derive through the configuration verifiers; the two routes must
    // agree.
    let array = HoneycombArray::from_config(p.to_config())
        .expect("diagonal check and configuration verifier agree");
    Some(array)
}

/// Maps a Costas array into the hexagonal grid and reports the honeycomb
/// array it gives rise to, if any. Non-Costas input is rejected.
pub fn costas_to_honeycomb(p: &Permutation) -> Result<Option<HoneycombArray>, SearchError> {
    if !p.is_costas() {
        return Err(SearchError::NotCostas);
    }
    let lifted = honeycomb_from_costas(p);
    debug_assert_eq!(
        lifted.is_some(),
        HoneycombArray::from_config(p.to_config()).is_some()
    );
    Ok(lifted)
}

/// Finds every honeycomb array with `num_dots` dots by enumerating the
/// Costas arrays of that order and filtering; every honeycomb array arises
/// this way. With `up_to_symmetry`, results are reduced to canonical
/// representatives of the 12-element point-group orbits.
///
/// Even dot counts return the empty list: with `opts.odd_shortcut` on
/// (the default) without searching, otherwise after an exhaustive run that
/// asserts no array was found.
pub fn search_honeycomb(
    num_dots: usize,
    up_to_symmetry: bool,
    opts: &SearchOptions,
) -> Result<Vec<HoneycombArray>, SearchError> {
    if num_dots == 0 {
        return Err(SearchError::EmptySearch);
    }
    if num_dots % 2 == 0 && opts.odd_shortcut {
        return Ok(Vec::new());
    }
    let costas = enumerate_costas(num_dots, opts)?;
    let mut found: Vec<HoneycombArray> =
        costas.iter().filter_map(honeycomb_from_costas).collect();
    if num_dots % 2 == 0 {
        assert!(found.is_empty(), "even-size honeycomb array found; verifiers inconsistent");
        return Ok(Vec::new());
    }
    if up_to_symmetry {
        let classes: BTreeSet<_> = found
            .into_iter()
            .map(|a| a.base().canonicalize())
            .collect();
        found = classes
            .into_iter()
            .map(|cfg| {
                HoneycombArray::from_config(cfg)
                    .expect("canonical form keeps both properties")
            })
            .collect();
    } else {
        found.sort_by(|a, b| a.base().cmp(b.base()));
    }
    Ok(found)
}

/// One line of the growth table.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub num_dots: usize,
    pub count: u64,
    /// `ln(count) / (n ln n)` with `n = (num_dots + 1) / 2`; zero for
    /// `n = 1` by convention (both logarithms vanish).
    pub ratio: f64,
}

/// Counts hexagonal permutations for every odd dot count up to `max_dots`
/// and reports how the counts grow. Purely observational; the per-count
/// guards and budget apply unchanged.
pub fn growth_report(
    max_dots: usize,
    opts: &SearchOptions,
) -> Result<Vec<GrowthRow>, SearchError> {
    if max_dots == 0 {
        return Err(SearchError::EmptySearch);
    }
    let mut rows = Vec::new();
    for num_dots in (1..=max_dots).step_by(2) {
        let result = count_hex_permutations(num_dots, opts)?;
        let n = (num_dots + 1) / 2;
        let ratio = if n == 1 {
            0.0
        } else {
            (result.count as f64).ln() / (n as f64 * (n as f64).ln())
        };
        rows.push(GrowthRow { num_dots, count: result.count, ratio });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn costas_to_honeycomb_examples() {
        let r0 = costas_to_honeycomb(&perm(&[0])).unwrap().unwrap();
        assert_eq!(r0.radius(), 0);
        let r1 = costas_to_honeycomb(&perm(&[1, 0, 2])).unwrap().unwrap();
        assert_eq!(r1.radius(), 1);
        assert!(costas_to_honeycomb(&perm(&[1, 2, 0])).unwrap().is_none());
        // Not a Costas array at all.
        assert_eq!(
            costas_to_honeycomb(&perm(&[0, 1, 2])),
            Err(SearchError::NotCostas)
        );
    }

    #[test]
    fn census_at_small_radii() {
        let opts = SearchOptions::default();
        let expected = [(1usize, 1usize), (3, 1), (5, 0), (7, 2), (9, 2)];
        for (num_dots, classes) in expected {
            let found = search_honeycomb(num_dots, true, &opts).unwrap();
            assert_eq!(found.len(), classes, "{num_dots} dots");
            for array in &found {
                assert_eq!(array.base().len(), num_dots);
                assert_eq!(array.radius() as usize, (num_dots - 1) / 2);
            }
        }
    }

    #[test]
    fn raw_census_counts_orbits_with_multiplicity() {
        let opts = SearchOptions::default();
        let raw = search_honeycomb(3, false, &opts).unwrap();
        let classes = search_honeycomb(3, true, &opts).unwrap();
        assert_eq!(raw.len(), 2);
        assert_eq!(classes.len(), 1);
        // Both raw arrays canonicalize to the single class.
        for array in &raw {
            assert_eq!(array.base().canonicalize(), *classes[0].base());
        }
    }

    #[test]
    fn even_dot_counts_yield_nothing() {
        let shortcut = SearchOptions::default();
        assert!(search_honeycomb(6, true, &shortcut).unwrap().is_empty());
        let full = SearchOptions { odd_shortcut: false, ..SearchOptions::default() };
        assert!(search_honeycomb(6, true, &full).unwrap().is_empty());
    }

    #[test]
    fn growth_rows() {
        let rows = growth_report(9, &SearchOptions::default()).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!((rows[0].num_dots, rows[0].count), (1, 1));
        assert_eq!(rows[0].ratio, 0.0);
        assert_eq!((rows[3].num_dots, rows[3].count), (7, 28));
        assert_eq!((rows[4].num_dots, rows[4].count), (9, 244));
        let n = 5.0f64;
        assert!((rows[4].ratio - 244f64.ln() / (n * n.ln())).abs() < 1e-12);
    }
}
