//! The coding-card language.
//!
//! A card lists the rows of a mosaic from the bottom (`A`) upwards. Each row
//! is a sequence of runs, `<count><color>`, laid down left to right:
//!
//! ```text
//! COLS 8
//! A: 3R 5Y
//! B: 8B
//! ```
//!
//! The `COLS` header is optional and defaults to 12, the width of the ball
//! machine's screen.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroU32;

use thiserror::Error;

use crate::grid::{Color, GridError, Mosaic};

pub const DEFAULT_COLUMNS: usize = 12;
/// Rows are labelled by single letters.
pub const MAX_ROWS: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardError {
    #[error("line {line}: row {label} appears more than once")]
    DuplicateLabel { line: usize, label: char },
    #[error("row {missing} is missing")]
    GapInLabels { missing: char },
    #[error("line {line}: bad run {token:?}")]
    BadRunSyntax { line: usize, token: String },
    #[error("line {line}: unknown color {code:?}")]
    UnknownColor { line: usize, code: char },
    #[error("line {line}: run {token:?} must have a count of at least 1")]
    NonPositiveCount { line: usize, token: String },
    #[error("line {line}: expected `<LABEL>: <runs>` or `COLS <n>`, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("card has {0} rows, at most 26 can be labelled")]
    TooManyRows(usize),
    #[error("card has no rows")]
    EmptyCard,
    #[error("invalid card: {0}")]
    InvalidCard(ValidationReport),
    #[error("row {label} is only partly filled")]
    PartialRow { label: char },
    #[error("row {label} is filled but a row below it is empty")]
    FloatingRow { label: char },
    #[error("mosaics differ in size: {target_rows}x{target_columns} vs {actual_rows}x{actual_columns}")]
    DimensionMismatch {
        target_rows: usize,
        target_columns: usize,
        actual_rows: usize,
        actual_columns: usize,
    },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// `count` balls of one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    count: NonZeroU32,
    pub color: Color,
}

impl Run {
    /// Returns `None` for a zero count.
    pub fn new(count: u32, color: Color) -> Option<Run> {
        NonZeroU32::new(count).map(|count| Run { count, color })
    }

    pub fn count(&self) -> u32 {
        self.count.get()
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.count, self.color.code())
    }
}

pub fn row_label(index: usize) -> char {
    assert!(index < MAX_ROWS, "row index {index} has no letter");
    (b'A' + index as u8) as char
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CardRow {
    label: char,
    pub runs: Vec<Run>,
}

impl CardRow {
    pub fn label(&self) -> char {
        self.label
    }

    pub fn sum(&self) -> u64 {
        self.runs.iter().map(|r| u64::from(r.count())).sum()
    }

    fn expand(&self) -> impl Iterator<Item = Color> + '_ {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.color, r.count() as usize))
    }
}

impl fmt::Display for CardRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.label)?;
        for run in &self.runs {
            write!(f, " {run}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodingCard {
    columns: usize,
    rows: Vec<CardRow>,
}

impl CodingCard {
    /// Builds a card from run lists given bottom row first; labels are
    /// assigned `A`, `B`, ... in that order.
    pub fn new(columns: usize, rows: Vec<Vec<Run>>) -> Result<CodingCard, CardError> {
        if rows.len() > MAX_ROWS {
            return Err(CardError::TooManyRows(rows.len()));
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, runs)| CardRow {
                label: row_label(i),
                runs,
            })
            .collect();
        Ok(CodingCard { columns, rows })
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Rows bottom first.
    pub fn rows(&self) -> &[CardRow] {
        &self.rows
    }

    pub fn parse(text: &str) -> Result<CodingCard, CardError> {
        let mut columns = None;
        let mut by_label: BTreeMap<char, Vec<Run>> = BTreeMap::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            let bad_line = || CardError::BadLine {
                line,
                text: raw.to_string(),
            };

            if let Some(rest) = trimmed.strip_prefix("COLS") {
                let n: usize = rest.trim().parse().map_err(|_| bad_line())?;
                if n == 0 || columns.is_some() {
                    return Err(bad_line());
                }
                columns = Some(n);
                continue;
            }

            let (label, body) = trimmed.split_once(':').ok_or_else(bad_line)?;
            let mut label_chars = label.trim().chars();
            let label = match (label_chars.next(), label_chars.next()) {
                (Some(c), None) if c.is_ascii_uppercase() => c,
                _ => return Err(bad_line()),
            };
            let runs = body
                .split_whitespace()
                .map(|token| parse_run(line, token))
                .collect::<Result<Vec<_>, _>>()?;
            if by_label.insert(label, runs).is_some() {
                return Err(CardError::DuplicateLabel { line, label });
            }
        }

        let mut rows = Vec::with_capacity(by_label.len());
        for (i, (label, runs)) in by_label.into_iter().enumerate() {
            let expected = row_label(i);
            if label != expected {
                return Err(CardError::GapInLabels { missing: expected });
            }
            rows.push(runs);
        }
        CodingCard::new(columns.unwrap_or(DEFAULT_COLUMNS), rows)
    }

    /// Canonical text: optional `COLS` header, then one line per row, bottom
    /// row first, no trailing newline.
    pub fn print(&self) -> String {
        let mut lines = Vec::with_capacity(self.rows.len() + 1);
        if self.columns != DEFAULT_COLUMNS {
            lines.push(format!("COLS {}", self.columns));
        }
        lines.extend(self.rows.iter().map(CardRow::to_string));
        lines.join("\n")
    }

    /// Checks the row-sum rule: every row must lay exactly `columns` balls.
    pub fn validate(&self) -> ValidationReport {
        let violations = self
            .rows
            .iter()
            .filter(|row| row.sum() != self.columns as u64)
            .map(|row| RowSum {
                label: row.label,
                sum: row.sum(),
                expected: self.columns,
            })
            .collect();
        ValidationReport { violations }
    }

    /// Runs the program: row `A` fills mosaic row 0, left to right.
    pub fn execute(&self) -> Result<Mosaic, CardError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(CardError::InvalidCard(report));
        }
        if self.rows.is_empty() {
            return Err(CardError::EmptyCard);
        }
        let mut mosaic = Mosaic::new(self.rows.len(), self.columns)?;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, color) in row.expand().enumerate() {
                mosaic.set(r, c, Some(color));
            }
        }
        Ok(mosaic)
    }

    /// Writes the canonical program for a mosaic. Rows must be either full
    /// or empty, and the full ones must sit at the bottom.
    pub fn encode(mosaic: &Mosaic) -> Result<CodingCard, CardError> {
        let mut rows = Vec::new();
        let mut seen_empty = false;
        for r in 0..mosaic.rows() {
            let cells = mosaic.row(r);
            let filled = cells.iter().filter(|c| c.is_some()).count();
            if filled == 0 {
                seen_empty = true;
                continue;
            }
            let label = if r < MAX_ROWS { row_label(r) } else { '?' };
            if filled < cells.len() {
                return Err(CardError::PartialRow { label });
            }
            if seen_empty {
                return Err(CardError::FloatingRow { label });
            }
            rows.push(runs_of(cells.iter().flatten().copied()));
        }
        CodingCard::new(mosaic.columns(), rows)
    }

    /// Merges adjacent runs of the same color.
    pub fn normalize(&self) -> CodingCard {
        let rows = self
            .rows
            .iter()
            .map(|row| CardRow {
                label: row.label,
                runs: merge_runs(&row.runs),
            })
            .collect();
        CodingCard {
            columns: self.columns,
            rows,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.runs.windows(2).all(|w| w[0].color != w[1].color))
    }
}

impl fmt::Display for CodingCard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

fn parse_run(line: usize, token: &str) -> Result<Run, CardError> {
    let bad = || CardError::BadRunSyntax {
        line,
        token: token.to_string(),
    };
    let mut chars = token.chars();
    let code = chars.next_back().ok_or_else(bad)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if code.is_ascii_digit() {
        return Err(bad());
    }
    let color = Color::from_code(code).map_err(|_| CardError::UnknownColor { line, code })?;
    let count: u32 = digits.parse().map_err(|_| bad())?;
    Run::new(count, color).ok_or_else(|| CardError::NonPositiveCount {
        line,
        token: token.to_string(),
    })
}

fn runs_of(colors: impl IntoIterator<Item = Color>) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for color in colors {
        match runs.last_mut() {
            Some(last) if last.color == color => {
                last.count = last.count.saturating_add(1);
            }
            _ => runs.push(Run::new(1, color).expect("nonzero")),
        }
    }
    runs
}

fn merge_runs(runs: &[Run]) -> Vec<Run> {
    let mut merged: Vec<Run> = Vec::with_capacity(runs.len());
    for run in runs {
        match merged.last_mut() {
            Some(last) if last.color == run.color => {
                last.count = last.count.saturating_add(run.count());
            }
            _ => merged.push(*run),
        }
    }
    merged
}

/// A row whose counts do not add up to the card width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowSum {
    pub label: char,
    pub sum: u64,
    pub expected: usize,
}

impl fmt::Display for RowSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RowSum row {}: {} ≠ {}",
            self.label, self.sum, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<RowSum>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.violations.iter().map(RowSum::to_string).collect();
        f.write_str(&lines.join("; "))
    }
}

/// Spreadsheet-style row letter: `A`..`Z`, then `AA`, `AB`, ...
pub fn mosaic_row_label(mut index: usize) -> String {
    let mut label = Vec::new();
    loop {
        label.push(b'A' + (index % 26) as u8);
        if index < 26 {
            break;
        }
        index = index / 26 - 1;
    }
    label.reverse();
    String::from_utf8(label).expect("ascii")
}

/// One cell where the built mosaic differs from the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Row index from the bottom, 0-based.
    pub row: usize,
    /// Column number from the left, 1-based.
    pub column: usize,
    pub expected: Option<Color>,
    pub actual: Option<Color>,
}

impl Mismatch {
    pub fn row_label(&self) -> String {
        mosaic_row_label(self.row)
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}: expected {}, got {}",
            self.row_label(),
            self.column,
            crate::grid::cell_code(self.expected),
            crate::grid::cell_code(self.actual)
        )
    }
}

/// Cell-by-cell comparison, bottom row first and left to right.
pub fn diff(target: &Mosaic, actual: &Mosaic) -> Result<Vec<Mismatch>, CardError> {
    if target.rows() != actual.rows() || target.columns() != actual.columns() {
        return Err(CardError::DimensionMismatch {
            target_rows: target.rows(),
            target_columns: target.columns(),
            actual_rows: actual.rows(),
            actual_columns: actual.columns(),
        });
    }
    let mut mismatches = Vec::new();
    for r in 0..target.rows() {
        for c in 0..target.columns() {
            let (expected, got) = (target.get(r, c), actual.get(r, c));
            if expected != got {
                mismatches.push(Mismatch {
                    row: r,
                    column: c + 1,
                    expected,
                    actual: got,
                });
            }
        }
    }
    Ok(mismatches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    fn run(count: u32, color: Color) -> Run {
        Run::new(count, color).unwrap()
    }

    #[test]
    fn parse_single_row() {
        // hand tokenization: "3R" "4B" "5Y"
        let card = CodingCard::parse("A: 3R 4B 5Y").unwrap();
        assert_eq!(card.columns(), 12);
        assert_eq!(card.rows().len(), 1);
        assert_eq!(card.rows()[0].label(), 'A');
        assert_eq!(
            card.rows()[0].runs,
            vec![run(3, Red), run(4, Blue), run(5, Yellow)]
        );
    }

    #[test]
    fn parse_any_line_order() {
        let card = CodingCard::parse("B: 12R\nA: 12Y").unwrap();
        assert_eq!(card, CodingCard::parse("A: 12Y\nB: 12R").unwrap());
        assert_eq!(card.rows()[0].runs, vec![run(12, Yellow)]);
        assert_eq!(card.rows()[1].runs, vec![run(12, Red)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            CodingCard::parse("A: 0Y"),
            Err(CardError::NonPositiveCount { line: 1, .. })
        ));
        assert!(matches!(
            CodingCard::parse("A: 12Y\nA: 12R"),
            Err(CardError::DuplicateLabel { line: 2, label: 'A' })
        ));
        assert_eq!(
            CodingCard::parse("A: 12Y\nC: 12R"),
            Err(CardError::GapInLabels { missing: 'B' })
        );
        assert_eq!(
            CodingCard::parse("B: 12R"),
            Err(CardError::GapInLabels { missing: 'A' })
        );
        assert!(matches!(
            CodingCard::parse("A: R3"),
            Err(CardError::BadRunSyntax { .. })
        ));
        assert!(matches!(
            CodingCard::parse("A: 12"),
            Err(CardError::BadRunSyntax { .. })
        ));
        assert!(matches!(
            CodingCard::parse("A: 12Z"),
            Err(CardError::UnknownColor { code: 'Z', .. })
        ));
        assert!(matches!(
            CodingCard::parse("hello"),
            Err(CardError::BadLine { .. })
        ));
    }

    #[test]
    fn print_rules() {
        let card = CodingCard::new(12, vec![vec![run(12, Yellow)]]).unwrap();
        assert_eq!(card.print(), "A: 12Y");
        let narrow = CodingCard::new(8, vec![vec![run(8, Red)]]).unwrap();
        assert_eq!(narrow.print(), "COLS 8\nA: 8R");
        assert_eq!(CodingCard::parse("COLS 8\nA: 8R").unwrap(), narrow);
        for text in ["A: 3R 4B 5Y", "A: 12Y\nB: 12R", "COLS 3\nA: 1Y 2K", ""] {
            assert_eq!(CodingCard::parse(text).unwrap().print(), text);
        }
    }

    #[test]
    fn validate_row_sums() {
        assert!(CodingCard::parse("A: 3R 4B 5Y").unwrap().validate().is_valid());
        let report = CodingCard::parse("A: 3R 4B 4Y").unwrap().validate();
        assert_eq!(
            report.violations,
            vec![RowSum {
                label: 'A',
                sum: 11,
                expected: 12
            }]
        );
        assert!(CodingCard::parse("").unwrap().validate().is_valid());
    }

    #[test]
    fn execute_expands_runs() {
        let m = CodingCard::parse("A: 12Y").unwrap().execute().unwrap();
        assert_eq!(m.render(), "YYYYYYYYYYYY");
        let m = CodingCard::parse("A: 3R 4B 5Y").unwrap().execute().unwrap();
        assert_eq!(m.render(), "RRRBBBBYYYYY");
        let m = CodingCard::parse("A: 12Y\nB: 6R 6K").unwrap().execute().unwrap();
        assert_eq!(m.render(), "RRRRRRKKKKKK\nYYYYYYYYYYYY");
        assert!(matches!(
            CodingCard::parse("A: 3R 4B 4Y").unwrap().execute(),
            Err(CardError::InvalidCard(_))
        ));
    }

    #[test]
    fn encode_canonical() {
        let m = Mosaic::parse("YYYYYYYYYYYY").unwrap();
        assert_eq!(CodingCard::encode(&m).unwrap().print(), "A: 12Y");
        let m = Mosaic::parse("RRRBBBBYYYYY").unwrap();
        assert_eq!(CodingCard::encode(&m).unwrap().print(), "A: 3R 4B 5Y");
        let m = Mosaic::parse("RRR.BBBBYYYY").unwrap();
        assert_eq!(
            CodingCard::encode(&m),
            Err(CardError::PartialRow { label: 'A' })
        );
        let m = Mosaic::parse("RRRRRRRRRRRR\n............").unwrap();
        assert_eq!(
            CodingCard::encode(&m),
            Err(CardError::FloatingRow { label: 'B' })
        );
        // empty rows on top are simply not part of the program
        let m = Mosaic::parse("............\nRRRRRRRRRRRR").unwrap();
        assert_eq!(CodingCard::encode(&m).unwrap().print(), "A: 12R");
    }

    #[test]
    fn normalize_merges() {
        let card = CodingCard::parse("A: 2R 1R 9Y").unwrap().normalize();
        assert_eq!(card.print(), "A: 3R 9Y");
        assert_eq!(card.normalize(), card);
        let alt = CodingCard::parse("A: 1Y 1R 1Y 1R 1Y 1R 1Y 1R 1Y 1R 1Y 1R").unwrap();
        assert_eq!(alt.normalize(), alt);
    }

    #[test]
    fn diff_cases() {
        let target = Mosaic::parse("RRRRRRRRRRRR").unwrap();
        assert_eq!(diff(&target, &target).unwrap(), vec![]);
        let actual = Mosaic::parse("YRRRRRRRRRRR").unwrap();
        let d = diff(&target, &actual).unwrap();
        assert_eq!(
            d,
            vec![Mismatch {
                row: 0,
                column: 1,
                expected: Some(Red),
                actual: Some(Yellow)
            }]
        );
        assert_eq!(d[0].to_string(), "A1: expected R, got Y");
        let tall = Mosaic::new(2, 12).unwrap();
        assert!(matches!(
            diff(&target, &tall),
            Err(CardError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn diff_orders_bottom_first() {
        let target = Mosaic::parse("YY\nYY").unwrap();
        let actual = Mosaic::parse("RY\nYR").unwrap();
        let d = diff(&target, &actual).unwrap();
        assert_eq!((d[0].row, d[0].column), (0, 2));
        assert_eq!((d[1].row, d[1].column), (1, 1));
    }

    #[test]
    fn row_labels_past_z() {
        assert_eq!(mosaic_row_label(0), "A");
        assert_eq!(mosaic_row_label(25), "Z");
        assert_eq!(mosaic_row_label(26), "AA");
        assert_eq!(mosaic_row_label(27), "AB");
    }
}
