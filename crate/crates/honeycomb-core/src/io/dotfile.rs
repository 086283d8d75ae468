use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::config::DotConfiguration;
use crate::hexgrid::{Cell, Region, TriOrientation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DotFileError {
    #[error("missing \"hexdots 1\" header")]
    MissingHeader,
    #[error("line {line}: expected \"hexdots 1\" header")]
    BadHeader { line: usize },
    #[error("line {line}: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("line {line}: duplicate dot {col} {row}")]
    DuplicateDot { line: usize, col: i32, row: i32 },
    #[error("line {line}: more than one region annotation")]
    DuplicateRegion { line: usize },
    #[error("line {line}: region must come before the dots")]
    LateRegion { line: usize },
}

/// A parsed "hexdots 1" file: the dot list at its original coordinates,
/// plus an optional region annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotFileDocument {
    /// Distinct cells sorted by (row, col); not translation-normalized,
    /// so region containment reads off the file coordinates.
    pub dots: Vec<Cell>,
    pub region: Option<Region>,
}

impl DotFileDocument {
    pub fn new<I: IntoIterator<Item = Cell>>(dots: I, region: Option<Region>) -> Self {
        let set: BTreeSet<Cell> = dots.into_iter().collect();
        DotFileDocument { dots: set.into_iter().collect(), region }
    }

    pub fn config(&self) -> DotConfiguration {
        DotConfiguration::new(self.dots.iter().copied())
    }
}

/// Grammar: comment lines start with '#' and blank lines are skipped; the
/// first significant line must be `hexdots 1`; an optional single
/// `region <kind> <params>` line may follow; every further line is one
/// `col row` integer pair.
pub fn parse_document(text: &str) -> Result<DotFileDocument, DotFileError> {
    let mut dots: Vec<Cell> = Vec::new();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut region: Option<Region> = None;
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !header_seen {
            if trimmed != "hexdots 1" {
                return Err(DotFileError::BadHeader { line });
            }
            header_seen = true;
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == "region" {
            if region.is_some() {
                return Err(DotFileError::DuplicateRegion { line });
            }
            if !dots.is_empty() {
                return Err(DotFileError::LateRegion { line });
            }
            region = Some(parse_region(&tokens[1..], line)?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(DotFileError::Malformed {
                line,
                detail: format!("expected \"col row\", got \"{trimmed}\""),
            });
        }
        let col = parse_int(tokens[0], line)?;
        let row = parse_int(tokens[1], line)?;
        let cell = Cell::new(col, row);
        if !seen.insert(cell) {
            return Err(DotFileError::DuplicateDot { line, col, row });
        }
        dots.push(cell);
    }
    if !header_seen {
        return Err(DotFileError::MissingHeader);
    }
    dots.sort();
    Ok(DotFileDocument { dots, region })
}

/// Parses a dot file into a translation-normalized configuration.
pub fn parse_dots(text: &str) -> Result<DotConfiguration, DotFileError> {
    Ok(parse_document(text)?.config())
}

fn parse_int(token: &str, line: usize) -> Result<i32, DotFileError> {
    token.parse().map_err(|_| DotFileError::Malformed {
        line,
        detail: format!("\"{token}\" is not an integer"),
    })
}

fn parse_region(tokens: &[&str], line: usize) -> Result<Region, DotFileError> {
    let malformed = |detail: String| DotFileError::Malformed { line, detail };
    let int = |t: &str| parse_int(t, line);
    let unsigned = |t: &str| -> Result<u32, DotFileError> {
        t.parse()
            .map_err(|_| malformed(format!("\"{t}\" is not a non-negative integer")))
    };
    match tokens {
        ["lee-sphere", c, r, radius] => {
            Ok(Region::lee_sphere(Cell::new(int(c)?, int(r)?), unsigned(radius)?))
        }
        ["tricentred", c, r, radius, orient] => {
            let orientation = match *orient {
                "up" => TriOrientation::Up,
                "down" => TriOrientation::Down,
                other => return Err(malformed(format!("unknown orientation \"{other}\""))),
            };
            Ok(Region::tricentred(Cell::new(int(c)?, int(r)?), unsigned(radius)?, orientation))
        }
        ["staircase", c, r, index, size] => {
            Region::staircase(unsigned(index)?, unsigned(size)?, Cell::new(int(c)?, int(r)?))
                .map_err(|e| malformed(e.to_string()))
        }
        ["triangle", c, r, width] => {
            Region::triangular_board(unsigned(width)?, Cell::new(int(c)?, int(r)?))
                .map_err(|e| malformed(e.to_string()))
        }
        ["custom", rest @ ..] => {
            if rest.is_empty() || rest.len() % 2 != 0 {
                return Err(malformed("custom region needs col/row pairs".into()));
            }
            let cells: Vec<Cell> = rest
                .chunks(2)
                .map(|pair| Ok(Cell::new(int(pair[0])?, int(pair[1])?)))
                .collect::<Result<_, DotFileError>>()?;
            Ok(Region::custom(cells))
        }
        _ => Err(malformed(format!("unrecognised region annotation \"{}\"", tokens.join(" ")))),
    }
}

fn region_line(region: &Region) -> String {
    match region {
        Region::LeeSphere { center, radius } => {
            format!("region lee-sphere {} {} {radius}", center.col, center.row)
        }
        Region::TricentredLeeSphere { anchor, radius, orientation } => {
            let o = match orientation {
                TriOrientation::Up => "up",
                TriOrientation::Down => "down",
            };
            format!("region tricentred {} {} {radius} {o}", anchor.col, anchor.row)
        }
        Region::Staircase { index, size, anchor } => {
            format!("region staircase {} {} {index} {size}", anchor.col, anchor.row)
        }
        Region::TriangularBoard { width, anchor } => {
            format!("region triangle {} {} {width}", anchor.col, anchor.row)
        }
        Region::Custom { cells } => {
            let mut out = String::from("region custom");
            for c in cells {
                let _ = write!(out, " {} {}", c.col, c.row);
            }
            out
        }
    }
}

pub fn write_document(doc: &DotFileDocument) -> String {
    let mut out = String::from("hexdots 1\n");
    if let Some(region) = &doc.region {
        out.push_str(&region_line(region));
        out.push('\n');
    }
    for dot in &doc.dots {
        let _ = writeln!(out, "{} {}", dot.col, dot.row);
    }
    out
}

/// Writes a configuration as a dot file: header plus one `col row` line
/// per dot in (row, col) order. Byte-exact for identical inputs.
pub fn write_dots(cfg: &DotConfiguration) -> String {
    write_document(&DotFileDocument::new(cfg.dots().iter().copied(), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_minimal_file() {
        let cfg = parse_dots("hexdots 1\n0 0\n").unwrap();
        assert_eq!(cfg.dots(), &[Cell::new(0, 0)]);
    }

    #[test]
    fn writer_emits_row_col_order() {
        let cfg = DotConfiguration::new([Cell::new(0, 1), Cell::new(1, 0), Cell::new(2, 2)]);
        assert_eq!(write_dots(&cfg), "hexdots 1\n1 0\n0 1\n2 2\n");
    }

    #[test]
    fn duplicate_dot_is_an_error() {
        let err = parse_dots("hexdots 1\n0 0\n0 0\n").unwrap_err();
        assert_eq!(err, DotFileError::DuplicateDot { line: 3, col: 0, row: 0 });
    }

    #[test]
    fn header_is_required() {
        assert_eq!(parse_dots(""), Err(DotFileError::MissingHeader));
        assert_eq!(parse_dots("# only a comment\n"), Err(DotFileError::MissingHeader));
        assert_eq!(parse_dots("0 0\n"), Err(DotFileError::BadHeader { line: 1 }));
        assert_eq!(parse_dots("hexdots 2\n"), Err(DotFileError::BadHeader { line: 1 }));
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let err = parse_dots("hexdots 1\n0 0\n1 x\n").unwrap_err();
        assert!(matches!(err, DotFileError::Malformed { line: 3, .. }));
        let err = parse_dots("hexdots 1\n0\n").unwrap_err();
        assert!(matches!(err, DotFileError::Malformed { line: 2, .. }));
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# a file\n\nhexdots 1\n# body comment\n0 0\n\n1 1\n";
        let cfg = parse_dots(text).unwrap();
        assert_eq!(cfg.len(), 2);
    }

    #[test]
    fn region_annotations_round_trip() {
        let regions = [
            Region::lee_sphere(Cell::new(1, 1), 2),
            Region::tricentred(Cell::new(0, -1), 1, TriOrientation::Up),
            Region::tricentred(Cell::new(0, 0), 0, TriOrientation::Down),
            Region::staircase(1, 3, Cell::new(0, 0)).unwrap(),
            Region::triangular_board(4, Cell::new(-2, 3)).unwrap(),
            Region::custom([Cell::new(0, 0), Cell::new(2, 1)]),
        ];
        for region in regions {
            let doc = DotFileDocument::new([Cell::new(0, 0)], Some(region.clone()));
            let text = write_document(&doc);
            let back = parse_document(&text).unwrap();
            assert_eq!(back, doc, "{text}");
        }
    }

    #[test]
    fn region_misuse_is_rejected() {
        let twice = "hexdots 1\nregion lee-sphere 0 0 1\nregion lee-sphere 0 0 1\n";
        assert_eq!(
            parse_document(twice).unwrap_err(),
            DotFileError::DuplicateRegion { line: 3 }
        );
        let late = "hexdots 1\n0 0\nregion lee-sphere 0 0 1\n";
        assert_eq!(parse_document(late).unwrap_err(), DotFileError::LateRegion { line: 3 });
        let unknown = "hexdots 1\nregion pentagon 0 0\n";
        assert!(matches!(
            parse_document(unknown).unwrap_err(),
            DotFileError::Malformed { line: 2, .. }
        ));
        let bad_staircase = "hexdots 1\nregion staircase 0 0 5 3\n";
        assert!(matches!(
            parse_document(bad_staircase).unwrap_err(),
            DotFileError::Malformed { line: 2, .. }
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip_random_configurations(
            cells in proptest::collection::vec((-30i32..30, -30i32..30), 1..40)
        ) {
            let cfg = DotConfiguration::new(cells.into_iter().map(|(c, r)| Cell::new(c, r)));
            let text = write_dots(&cfg);
            prop_assert_eq!(parse_dots(&text).unwrap(), cfg.clone());
            // Writing is stable under a second round trip.
            prop_assert_eq!(write_dots(&parse_dots(&text).unwrap()), text);
        }
    }
}
