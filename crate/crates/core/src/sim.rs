//! Simulator for the ball-launching machine.
//!
//! The screen has 12 columns. Balls wait in a feed queue; the child sees the
//! front ball and can launch it into a column, send it back to the reservoir
//! with Exit, or empty a whole column with Reset. Balls that leave the
//! screen or the front of the feed rejoin the back of the queue, so no ball
//! is ever lost.
//!
//! Scripts drive the machine one command per line:
//!
//! ```text
//! L 3    launch the front ball into column 3
//! X      exit: move the front ball to the back of the feed
//! R 3    reset column 3, returning its balls bottom first
//! P      peek: log the front ball's color
//! ```

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::grid::{Color, GridError, Inventory, Mosaic};

pub const COLUMNS: usize = 12;
pub const DEFAULT_ROWS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("feed holds {count} {} balls but the machine has only {cap}", .color.name())]
    InventoryExceeded {
        color: Color,
        count: usize,
        cap: usize,
    },
    #[error("the feed is empty")]
    EmptyFeed,
    #[error("column {0} is full")]
    ColumnFull(usize),
    #[error("column {0} does not exist (1-12)")]
    BadColumn(usize),
    #[error("machine needs at least one row")]
    BadRows,
    #[error("line {line}: cannot read command {text:?}")]
    BadScriptSyntax { line: usize, text: String },
    #[error("bad feed: {0}")]
    BadFeed(#[from] GridError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimCommand {
    /// Column numbers are 1-based, like the buttons.
    Launch(usize),
    Exit,
    ResetColumn(usize),
    Peek,
}

impl fmt::Display for SimCommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimCommand::Launch(c) => write!(f, "L {c}"),
            SimCommand::Exit => f.write_str("X"),
            SimCommand::ResetColumn(c) => write!(f, "R {c}"),
            SimCommand::Peek => f.write_str("P"),
        }
    }
}

/// Parses one script line; `line` is used for error reporting.
pub fn parse_command(text: &str, line: usize) -> Result<SimCommand, SimError> {
    let bad = || SimError::BadScriptSyntax {
        line,
        text: text.to_string(),
    };
    let column = |arg: Option<&str>| -> Result<usize, SimError> {
        let n: usize = arg.ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if (1..=COLUMNS).contains(&n) {
            Ok(n)
        } else {
            Err(bad())
        }
    };
    let mut parts = text.split_whitespace();
    let (op, arg, extra) = (parts.next(), parts.next(), parts.next());
    if extra.is_some() {
        return Err(bad());
    }
    match (op, arg) {
        (Some("L"), a) => Ok(SimCommand::Launch(column(a)?)),
        (Some("R"), a) => Ok(SimCommand::ResetColumn(column(a)?)),
        (Some("X"), None) => Ok(SimCommand::Exit),
        (Some("P"), None) => Ok(SimCommand::Peek),
        _ => Err(bad()),
    }
}

/// Parses a script; blank lines are skipped. Returns `(line number, command)`.
pub fn parse_script(text: &str) -> Result<Vec<(usize, SimCommand)>, SimError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_command(l.trim(), i + 1).map(|cmd| (i + 1, cmd)))
        .collect()
}

pub fn format_script(commands: &[SimCommand]) -> String {
    commands
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Reads a feed literal such as `FEED YYRRB`; the `FEED` tag is optional
/// and whitespace is ignored.
pub fn parse_feed(text: &str) -> Result<Vec<Color>, SimError> {
    let text = text.trim();
    let text = text.strip_prefix("FEED").unwrap_or(text);
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| Color::from_code(c).map_err(SimError::from))
        .collect()
}

pub fn format_feed<'a>(feed: impl IntoIterator<Item = &'a Color>) -> String {
    let codes: String = feed.into_iter().map(|c| c.code()).collect();
    format!("FEED {codes}").trim_end().to_string()
}

fn color_counts<'a>(balls: impl IntoIterator<Item = &'a Color>) -> [usize; 5] {
    let mut counts = [0; 5];
    for ball in balls {
        counts[ball.index()] += 1;
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineState {
    grid: Mosaic,
    feed: VecDeque<Color>,
    initial: [usize; 5],
}

impl MachineState {
    pub fn new(feed: Vec<Color>, rows: usize) -> Result<MachineState, SimError> {
        if rows == 0 {
            return Err(SimError::BadRows);
        }
        let counts = color_counts(&feed);
        let inventory = Inventory::default();
        for color in Color::ALL {
            let (count, cap) = (counts[color.index()], inventory.cap(color));
            if count > cap {
                return Err(SimError::InventoryExceeded { color, count, cap });
            }
        }
        Ok(MachineState {
            grid: Mosaic::new(rows, COLUMNS).expect("positive dimensions"),
            feed: feed.into(),
            initial: counts,
        })
    }

    pub fn rows(&self) -> usize {
        self.grid.rows()
    }

    pub fn feed(&self) -> &VecDeque<Color> {
        &self.feed
    }

    /// The ball the child can see next.
    pub fn front(&self) -> Option<Color> {
        self.feed.front().copied()
    }

    /// Balls stacked in a 1-based column.
    pub fn height(&self, column: usize) -> usize {
        self.grid.column_height(column - 1)
    }

    /// Copy of the screen.
    pub fn snapshot(&self) -> Mosaic {
        self.grid.clone()
    }

    /// Whether screen plus feed still hold exactly the balls the machine
    /// started with.
    pub fn is_conserved(&self) -> bool {
        let mut counts = color_counts(&self.feed);
        for (c, n) in self.grid.color_counts().iter().enumerate() {
            counts[c] += n;
        }
        counts == self.initial
    }

    fn check_column(column: usize) -> Result<usize, SimError> {
        if (1..=COLUMNS).contains(&column) {
            Ok(column - 1)
        } else {
            Err(SimError::BadColumn(column))
        }
    }

    pub fn launch(&mut self, column: usize) -> Result<(), SimError> {
        let c = Self::check_column(column)?;
        let ball = self.front().ok_or(SimError::EmptyFeed)?;
        let height = self.grid.column_height(c);
        if height == self.rows() {
            return Err(SimError::ColumnFull(column));
        }
        self.grid.set(height, c, Some(ball));
        self.feed.pop_front();
        Ok(())
    }

    pub fn exit_ball(&mut self) -> Result<(), SimError> {
        let ball = self.feed.pop_front().ok_or(SimError::EmptyFeed)?;
        self.feed.push_back(ball);
        Ok(())
    }

    pub fn reset_column(&mut self, column: usize) -> Result<(), SimError> {
        let c = Self::check_column(column)?;
        for r in 0..self.grid.column_height(c) {
            self.feed.push_back(self.grid.get(r, c).expect("packed column"));
            self.grid.set(r, c, None);
        }
        Ok(())
    }

    pub fn peek(&self) -> Result<Color, SimError> {
        self.front().ok_or(SimError::EmptyFeed)
    }

    /// Applies one command. On error the state is unchanged. Returns the
    /// peeked color for [`SimCommand::Peek`].
    pub fn apply(&mut self, command: SimCommand) -> Result<Option<Color>, SimError> {
        match command {
            SimCommand::Launch(c) => self.launch(c).map(|_| None),
            SimCommand::Exit => self.exit_ball().map(|_| None),
            SimCommand::ResetColumn(c) => self.reset_column(c).map(|_| None),
            SimCommand::Peek => self.peek().map(Some),
        }
    }

    /// Runs a script. Peeks are recorded in the returned log.
    pub fn run_script(&self, script: &str) -> Result<(MachineState, Vec<Color>), ScriptError> {
        let commands = parse_script(script).map_err(|error| {
            let line = match &error {
                SimError::BadScriptSyntax { line, .. } => *line,
                _ => 0,
            };
            ScriptError {
                line,
                index: None,
                error,
                state: Box::new(self.clone()),
            }
        })?;
        let mut state = self.clone();
        let mut log = Vec::new();
        for (index, (line, command)) in commands.into_iter().enumerate() {
            match state.apply(command) {
                Ok(Some(color)) => log.push(color),
                Ok(None) => {}
                Err(error) => {
                    return Err(ScriptError {
                        line,
                        index: Some(index),
                        error,
                        state: Box::new(state),
                    })
                }
            }
        }
        Ok((state, log))
    }
}

/// A script that stopped early.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct ScriptError {
    pub line: usize,
    /// 0-based index of the failing command; `None` for syntax errors.
    pub index: Option<usize>,
    pub error: SimError,
    /// State just before the failing command.
    pub state: Box<MachineState>,
}

/// Text report of a finished run: the screen, the remaining feed, then one
/// `PEEK <code>` line per logged peek.
pub fn format_outcome(state: &MachineState, log: &[Color]) -> String {
    let mut lines = vec![state.snapshot().render(), format_feed(state.feed())];
    lines.extend(log.iter().map(|c| format!("PEEK {}", c.code())));
    lines.join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("target must have {COLUMNS} columns, got {0}")]
    WrongWidth(usize),
    #[error("target has {target} rows but the machine has {machine}")]
    TooTall { target: usize, machine: usize },
    #[error("target has floating balls")]
    NotGravityValid,
    #[error("target needs {needed} {} balls, feed has {available}", .color.name())]
    NotEnoughBalls {
        color: Color,
        needed: usize,
        available: usize,
    },
}

/// Writes a script that builds `target` from an empty machine with the given
/// feed: column by column, bottom up, exiting balls until the needed color is
/// in front, then launching it.
pub fn synthesize_script(
    target: &Mosaic,
    feed: &[Color],
    rows: usize,
) -> Result<Vec<SimCommand>, SynthError> {
    if target.columns() != COLUMNS {
        return Err(SynthError::WrongWidth(target.columns()));
    }
    let filled_rows = (0..target.rows())
        .rev()
        .find(|&r| target.row(r).iter().any(Option::is_some))
        .map_or(0, |r| r + 1);
    if filled_rows > rows {
        return Err(SynthError::TooTall {
            target: filled_rows,
            machine: rows,
        });
    }
    if !target.is_gravity_consistent() {
        return Err(SynthError::NotGravityValid);
    }
    let needed = target.color_counts();
    let available = color_counts(feed);
    for color in Color::ALL {
        let i = color.index();
        if needed[i] > available[i] {
            return Err(SynthError::NotEnoughBalls {
                color,
                needed: needed[i],
                available: available[i],
            });
        }
    }

    let mut queue: VecDeque<Color> = feed.iter().copied().collect();
    let mut script = Vec::new();
    for c in 0..COLUMNS {
        for r in 0..target.column_height(c) {
            let want = target.get(r, c).expect("packed column");
            // enough balls of `want` remain, so this terminates within one lap
            while queue.front() != Some(&want) {
                let ball = queue.pop_front().expect("nonempty feed");
                queue.push_back(ball);
                script.push(SimCommand::Exit);
            }
            queue.pop_front();
            script.push(SimCommand::Launch(c + 1));
        }
    }
    Ok(script)
}
