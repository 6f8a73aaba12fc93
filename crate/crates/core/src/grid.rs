//! Ball colors, mosaics and the ball inventory shared by the card codec and
//! the machine simulator.
//!
//! Mosaic coordinates are `(row, column)` with row 0 at the bottom and
//! column 0 at the left, the same way coding cards number their rows.
//!
//! The text format is one line per row, top row first, using the color
//! codes `Y R B W K` and `.` for an empty cell.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("unknown color code {0:?}")]
    UnknownColor(char),
    #[error("line {line} has {found} cells, expected {expected}")]
    RaggedLines {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("mosaic text is empty")]
    Empty,
    #[error("mosaic dimensions must be positive, got {rows}x{columns}")]
    BadDimensions { rows: usize, columns: usize },
}

/// One of the five ball colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Yellow,
    Red,
    Blue,
    White,
    Black,
}

impl Color {
    pub const ALL: [Color; 5] = [
        Color::Yellow,
        Color::Red,
        Color::Blue,
        Color::White,
        Color::Black,
    ];

    /// Parses a one-letter code, case-insensitively.
    pub fn from_code(code: char) -> Result<Color, GridError> {
        match code.to_ascii_uppercase() {
            'Y' => Ok(Color::Yellow),
            'R' => Ok(Color::Red),
            'B' => Ok(Color::Blue),
            'W' => Ok(Color::White),
            'K' => Ok(Color::Black),
            _ => Err(GridError::UnknownColor(code)),
        }
    }

    pub fn code(self) -> char {
        match self {
            Color::Yellow => 'Y',
            Color::Red => 'R',
            Color::Blue => 'B',
            Color::White => 'W',
            Color::Black => 'K',
        }
    }

    /// Lowercase English name, as used by the drawing language.
    pub fn name(self) -> &'static str {
        match self {
            Color::Yellow => "yellow",
            Color::Red => "red",
            Color::Blue => "blue",
            Color::White => "white",
            Color::Black => "black",
        }
    }

    pub fn from_name(name: &str) -> Option<Color> {
        Color::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(name))
    }

    /// Position in [`Color::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

pub(crate) fn cell_code(cell: Option<Color>) -> char {
    cell.map_or('.', Color::code)
}

pub(crate) fn parse_cell(ch: char) -> Result<Option<Color>, GridError> {
    if ch == '.' {
        Ok(None)
    } else {
        Color::from_code(ch).map(Some)
    }
}

/// A rectangular grid of optional ball colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mosaic {
    rows: usize,
    columns: usize,
    cells: Vec<Option<Color>>,
}

impl Mosaic {
    /// An all-empty mosaic.
    pub fn new(rows: usize, columns: usize) -> Result<Mosaic, GridError> {
        if rows == 0 || columns == 0 {
            return Err(GridError::BadDimensions { rows, columns });
        }
        Ok(Mosaic {
            rows,
            columns,
            cells: vec![None; rows * columns],
        })
    }

    /// Builds a mosaic from rows listed bottom row first.
    pub fn from_rows(rows: Vec<Vec<Option<Color>>>) -> Result<Mosaic, GridError> {
        let columns = rows.first().map_or(0, Vec::len);
        let mut mosaic = Mosaic::new(rows.len(), columns)?;
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != columns {
                return Err(GridError::RaggedLines {
                    line: r + 1,
                    expected: columns,
                    found: row.len(),
                });
            }
            for (c, cell) in row.into_iter().enumerate() {
                mosaic.set(r, c, cell);
            }
        }
        Ok(mosaic)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Cell at `(row from bottom, column from left)`. Panics when out of bounds.
    pub fn get(&self, row: usize, column: usize) -> Option<Color> {
        assert!(row < self.rows && column < self.columns, "cell out of bounds");
        self.cells[row * self.columns + column]
    }

    pub fn set(&mut self, row: usize, column: usize, cell: Option<Color>) {
        assert!(row < self.rows && column < self.columns, "cell out of bounds");
        self.cells[row * self.columns + column] = cell;
    }

    /// One row, left to right.
    pub fn row(&self, row: usize) -> &[Option<Color>] {
        &self.cells[row * self.columns..(row + 1) * self.columns]
    }

    /// Number of filled cells in a column, counted from the bottom until the
    /// first gap.
    pub fn column_height(&self, column: usize) -> usize {
        (0..self.rows)
            .take_while(|&r| self.get(r, column).is_some())
            .count()
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Per-color tally indexed like [`Color::ALL`].
    pub fn color_counts(&self) -> [usize; 5] {
        let mut counts = [0; 5];
        for color in self.cells.iter().flatten() {
            counts[color.index()] += 1;
        }
        counts
    }

    /// Filled cells that sit above an empty cell in the same column, as
    /// `(row, column)`.
    pub fn gravity_violations(&self) -> Vec<(usize, usize)> {
        let mut floating = Vec::new();
        for c in 0..self.columns {
            let height = self.column_height(c);
            for r in height..self.rows {
                if self.get(r, c).is_some() {
                    floating.push((r, c));
                }
            }
        }
        floating.sort_unstable();
        floating
    }

    pub fn is_gravity_consistent(&self) -> bool {
        self.gravity_violations().is_empty()
    }

    /// Parses the text format: top row first, `.` for empty cells.
    ///
    /// A single trailing newline is tolerated.
    pub fn parse(text: &str) -> Result<Mosaic, GridError> {
        let text = text.strip_suffix('\n').unwrap_or(text);
        if text.is_empty() {
            return Err(GridError::Empty);
        }
        let lines: Vec<&str> = text.split('\n').collect();
        let columns = lines[0].chars().count();
        let mut bottom_up = Vec::with_capacity(lines.len());
        for (i, line) in lines.iter().enumerate() {
            let found = line.chars().count();
            if found != columns {
                return Err(GridError::RaggedLines {
                    line: i + 1,
                    expected: columns,
                    found,
                });
            }
            let row = line
                .chars()
                .map(parse_cell)
                .collect::<Result<Vec<_>, _>>()?;
            bottom_up.push(row);
        }
        bottom_up.reverse();
        Mosaic::from_rows(bottom_up)
    }

    /// Inverse of [`Mosaic::parse`]; no trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.columns + 1));
        for r in (0..self.rows).rev() {
            out.extend(self.row(r).iter().map(|&c| cell_code(c)));
            if r > 0 {
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// How many balls of each color the toy ships with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inventory {
    caps: [usize; 5],
}

impl Inventory {
    pub const DEFAULT_CAPS: [usize; 5] = [64, 64, 64, 16, 16];

    pub fn new(caps: [usize; 5]) -> Inventory {
        Inventory { caps }
    }

    pub fn cap(&self, color: Color) -> usize {
        self.caps[color.index()]
    }

    pub fn total(&self) -> usize {
        self.caps.iter().sum()
    }

    /// Per-color usage of `mosaic` against these caps.
    pub fn check(&self, mosaic: &Mosaic) -> InventoryReport {
        let counts = mosaic.color_counts();
        let usage = Color::ALL
            .into_iter()
            .map(|color| ColorUsage {
                color,
                used: counts[color.index()],
                cap: self.cap(color),
            })
            .collect();
        InventoryReport { usage }
    }
}

impl Default for Inventory {
    fn default() -> Self {
        Inventory::new(Self::DEFAULT_CAPS)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorUsage {
    pub color: Color,
    pub used: usize,
    pub cap: usize,
}

impl ColorUsage {
    pub fn exceeds_cap(&self) -> bool {
        self.used > self.cap
    }
}

impl fmt::Display for ColorUsage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} used={} cap={}", self.color.name(), self.used, self.cap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InventoryReport {
    /// One entry per color, in [`Color::ALL`] order.
    pub usage: Vec<ColorUsage>,
}

impl InventoryReport {
    pub fn violations(&self) -> Vec<ColorUsage> {
        self.usage.iter().copied().filter(ColorUsage::exceeds_cap).collect()
    }

    pub fn is_ok(&self) -> bool {
        self.usage.iter().all(|u| !u.exceeds_cap())
    }
}
