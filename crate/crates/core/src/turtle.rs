//! The directional drawing language.
//!
//! A program walks a cursor over a grid starting at the upper-left square.
//! `E`, `O`, `N` and `S` move one square right, left, up and down. A move
//! may carry a color, which fills the square moved into, and may be wrapped
//! in a loop counter: `(E blue)3` moves right three times, painting each
//! square it arrives on.
//!
//! ```text
//! START red (E blue)3 S O yellow
//! ```
//!
//! `START <color>` paints the origin before the first move.

use std::fmt;

use thiserror::Error;

use crate::grid::{cell_code, parse_cell, Color, GridError, Mosaic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TurtleError {
    #[error("offset {offset}: unexpected {token:?}")]
    BadToken { offset: usize, token: String },
    #[error("offset {offset}: loop count must be an integer of at least 1, got {found:?}")]
    BadCount { offset: usize, found: String },
    #[error("offset {offset}: unbalanced parenthesis")]
    DanglingParen { offset: usize },
    #[error(
        "instruction {instruction}, step {step}: move to ({}, {}) leaves the grid",
        .position.0, .position.1
    )]
    OffGrid {
        /// 1-based index into the program body.
        instruction: usize,
        /// 1-based step within the loop.
        step: u32,
        /// Attempted `(row, column)`.
        position: (i64, i64),
    },
    #[error("grid dimensions must be positive, got {width}x{height}")]
    BadDimensions { width: usize, height: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    N,
    S,
    E,
    /// West (*ovest*).
    O,
}

impl Direction {
    /// `(row, column)` delta; rows grow downwards.
    pub fn delta(self) -> (i64, i64) {
        match self {
            Direction::N => (-1, 0),
            Direction::S => (1, 0),
            Direction::E => (0, 1),
            Direction::O => (0, -1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Direction::N => 'N',
            Direction::S => 'S',
            Direction::E => 'E',
            Direction::O => 'O',
        }
    }

    fn from_word(word: &str) -> Option<Direction> {
        match word {
            "N" => Some(Direction::N),
            "S" => Some(Direction::S),
            "E" => Some(Direction::E),
            "O" => Some(Direction::O),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instruction {
    pub direction: Direction,
    pub paint: Option<Color>,
    pub repeat: u32,
}

impl Instruction {
    pub fn step(direction: Direction, paint: Option<Color>) -> Instruction {
        Instruction {
            direction,
            paint,
            repeat: 1,
        }
    }

    fn mergeable(&self, other: &Instruction) -> bool {
        self.direction == other.direction && self.paint == other.paint
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match self.paint {
            Some(color) => format!("{} {}", self.direction.letter(), color.name()),
            None => self.direction.letter().to_string(),
        };
        if self.repeat == 1 {
            f.write_str(&body)
        } else {
            write!(f, "({body}){}", self.repeat)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TurtleProgram {
    pub start_paint: Option<Color>,
    pub body: Vec<Instruction>,
}

/// A grid of optional colors addressed `(row from top, column from left)`.
///
/// Shares its text format with [`Mosaic`]: one line per row, top first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canvas {
    width: usize,
    height: usize,
    cells: Vec<Option<Color>>,
}

impl Canvas {
    pub fn new(width: usize, height: usize) -> Result<Canvas, TurtleError> {
        if width == 0 || height == 0 {
            return Err(TurtleError::BadDimensions { width, height });
        }
        Ok(Canvas {
            width,
            height,
            cells: vec![None; width * height],
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, row: usize, column: usize) -> Option<Color> {
        assert!(row < self.height && column < self.width, "cell out of bounds");
        self.cells[row * self.width + column]
    }

    pub fn set(&mut self, row: usize, column: usize, cell: Option<Color>) {
        assert!(row < self.height && column < self.width, "cell out of bounds");
        self.cells[row * self.width + column] = cell;
    }

    pub fn parse(text: &str) -> Result<Canvas, TurtleError> {
        Ok(Canvas::from(&Mosaic::parse(text)?))
    }

    pub fn render(&self) -> String {
        let lines: Vec<String> = self
            .cells
            .chunks(self.width)
            .map(|row| row.iter().map(|&c| cell_code(c)).collect())
            .collect();
        lines.join("\n")
    }

    /// Rows top first, each left to right.
    pub fn from_rows(rows: &[&str]) -> Result<Canvas, TurtleError> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.chars().count());
        let mut canvas = Canvas::new(width, height)?;
        for (r, row) in rows.iter().enumerate() {
            if row.chars().count() != width {
                return Err(GridError::RaggedLines {
                    line: r + 1,
                    expected: width,
                    found: row.chars().count(),
                }
                .into());
            }
            for (c, ch) in row.chars().enumerate() {
                canvas.set(r, c, parse_cell(ch)?);
            }
        }
        Ok(canvas)
    }
}

impl From<&Mosaic> for Canvas {
    fn from(mosaic: &Mosaic) -> Canvas {
        let (width, height) = (mosaic.columns(), mosaic.rows());
        let mut cells = Vec::with_capacity(width * height);
        for r in (0..height).rev() {
            cells.extend_from_slice(mosaic.row(r));
        }
        Canvas {
            width,
            height,
            cells,
        }
    }
}

impl fmt::Display for Canvas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Result of running a program: the painted canvas and where the cursor
/// stopped, as `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaintedGrid {
    pub canvas: Canvas,
    pub cursor: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let boundary = ch.is_whitespace() || ch == '(' || ch == ')';
        if boundary {
            if let Some(s) = start.take() {
                tokens.push((s, Token::Word(&text[s..i])));
            }
            match ch {
                '(' => tokens.push((i, Token::Open)),
                ')' => tokens.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, Token::Word(&text[s..])));
    }
    tokens
}

fn color_word(word: &str) -> Option<Color> {
    Color::from_name(word).or_else(|| {
        let mut chars = word.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Color::from_code(c).ok(),
            _ => None,
        }
    })
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token<'a>)> {
        self.tokens.get(self.pos)
    }

    fn bad_token(&self, offset: usize, token: &Token<'_>) -> TurtleError {
        let token = match token {
            Token::Open => "(".to_string(),
            Token::Close => ")".to_string(),
            Token::Word(w) => w.to_string(),
        };
        TurtleError::BadToken { offset, token }
    }

    fn next_color(&mut self) -> Option<Color> {
        if let Some((_, Token::Word(w))) = self.peek() {
            if let Some(color) = color_word(w) {
                self.pos += 1;
                return Some(color);
            }
        }
        None
    }

    fn direction(&mut self) -> Result<Direction, TurtleError> {
        match self.tokens.get(self.pos).cloned() {
            Some((offset, Token::Word(w))) => {
                self.pos += 1;
                Direction::from_word(w).ok_or(TurtleError::BadToken {
                    offset,
                    token: w.to_string(),
                })
            }
            Some((offset, tok)) => Err(self.bad_token(offset, &tok)),
            None => Err(TurtleError::DanglingParen { offset: self.end }),
        }
    }

    fn instruction(&mut self) -> Result<Instruction, TurtleError> {
        let (offset, token) = self.tokens[self.pos].clone();
        match token {
            Token::Word(_) => {
                let direction = self.direction()?;
                let paint = self.next_color();
                Ok(Instruction::step(direction, paint))
            }
            Token::Close => Err(TurtleError::DanglingParen { offset }),
            Token::Open => {
                self.pos += 1;
                let direction = self.direction()?;
                let paint = self.next_color();
                match self.tokens.get(self.pos).cloned() {
                    Some((_, Token::Close)) => self.pos += 1,
                    Some((o, Token::Word(w))) => {
                        return Err(TurtleError::BadToken {
                            offset: o,
                            token: w.to_string(),
                        })
                    }
                    Some((_, Token::Open)) | None => {
                        return Err(TurtleError::DanglingParen { offset })
                    }
                }
                let count_offset = self
                    .tokens
                    .get(self.pos)
                    .map_or(self.end, |(o, _)| *o);
                let repeat = match self.tokens.get(self.pos) {
                    Some((_, Token::Word(w))) => {
                        let w = *w;
                        self.pos += 1;
                        match w.parse::<u32>() {
                            Ok(n) if n >= 1 && w.bytes().all(|b| b.is_ascii_digit()) => n,
                            _ => {
                                return Err(TurtleError::BadCount {
                                    offset: count_offset,
                                    found: w.to_string(),
                                })
                            }
                        }
                    }
                    _ => {
                        return Err(TurtleError::BadCount {
                            offset: count_offset,
                            found: String::new(),
                        })
                    }
                };
                Ok(Instruction {
                    direction,
                    paint,
                    repeat,
                })
            }
        }
    }
}

impl TurtleProgram {
    pub fn parse(text: &str) -> Result<TurtleProgram, TurtleError> {
        let mut parser = Parser {
            tokens: tokenize(text),
            pos: 0,
            end: text.len(),
        };
        let mut program = TurtleProgram::default();

        if let Some((offset, Token::Word("START"))) = parser.peek().cloned() {
            parser.pos += 1;
            program.start_paint = Some(parser.next_color().ok_or_else(|| {
                match parser.peek().cloned() {
                    Some((o, tok)) => parser.bad_token(o, &tok),
                    None => TurtleError::BadToken {
                        offset,
                        token: "START".into(),
                    },
                }
            })?);
        }
        while parser.pos < parser.tokens.len() {
            program.body.push(parser.instruction()?);
        }
        Ok(program)
    }

    /// Canonical text: tokens separated by single spaces.
    pub fn print(&self) -> String {
        let mut parts = Vec::with_capacity(self.body.len() + 1);
        if let Some(color) = self.start_paint {
            parts.push(format!("START {}", color.name()));
        }
        parts.extend(self.body.iter().map(Instruction::to_string));
        parts.join(" ")
    }

    /// Runs the program on a `width` x `height` grid with the cursor starting
    /// in the upper-left square. Fails at the first move that leaves the grid.
    pub fn interpret(&self, width: usize, height: usize) -> Result<PaintedGrid, TurtleError> {
        let mut canvas = Canvas::new(width, height)?;
        let (mut row, mut col) = (0usize, 0usize);
        if let Some(color) = self.start_paint {
            canvas.set(0, 0, Some(color));
        }
        for (i, ins) in self.body.iter().enumerate() {
            let (dr, dc) = ins.direction.delta();
            for step in 1..=ins.repeat {
                let (nr, nc) = (row as i64 + dr, col as i64 + dc);
                if nr < 0 || nc < 0 || nr >= height as i64 || nc >= width as i64 {
                    return Err(TurtleError::OffGrid {
                        instruction: i + 1,
                        step,
                        position: (nr, nc),
                    });
                }
                (row, col) = (nr as usize, nc as usize);
                if let Some(color) = ins.paint {
                    canvas.set(row, col, Some(color));
                }
            }
        }
        Ok(PaintedGrid {
            canvas,
            cursor: (row, col),
        })
    }

    /// Folds consecutive instructions with the same direction and paint into
    /// a single looped instruction.
    pub fn compress(&self) -> TurtleProgram {
        let mut body: Vec<Instruction> = Vec::with_capacity(self.body.len());
        for ins in &self.body {
            match body.last_mut() {
                Some(last) if last.mergeable(ins) => last.repeat = last.repeat.saturating_add(ins.repeat),
                _ => body.push(*ins),
            }
        }
        TurtleProgram {
            start_paint: self.start_paint,
            body,
        }
    }

    /// Writes a program that redraws `canvas`, walking it in boustrophedon
    /// order: the top row left to right, the next right to left, and so on.
    pub fn compile(canvas: &Canvas) -> TurtleProgram {
        let mut program = TurtleProgram {
            start_paint: canvas.get(0, 0),
            body: Vec::new(),
        };
        for r in 0..canvas.height() {
            let rightward = r % 2 == 0;
            if r > 0 {
                let c = if rightward { 0 } else { canvas.width() - 1 };
                program
                    .body
                    .push(Instruction::step(Direction::S, canvas.get(r, c)));
            }
            for i in 1..canvas.width() {
                let (c, dir) = if rightward {
                    (i, Direction::E)
                } else {
                    (canvas.width() - 1 - i, Direction::O)
                };
                program.body.push(Instruction::step(dir, canvas.get(r, c)));
            }
        }
        program.compress()
    }
}

impl fmt::Display for TurtleProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}
