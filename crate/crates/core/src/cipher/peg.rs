//! The Peg Code cipher: a Polybius square addressed by colored pegs.
//!
//! Each letter sits in one cell of a 5x5 square and is written as the pair
//! (row color, column color). I and J share a cell, which decodes to `I`.
//!
//! Key file format:
//!
//! ```text
//! ROWS W O R G B
//! COLS W O R G B
//! ABCDE
//! FGHIK
//! LMNOP
//! QRSTU
//! VWXYZ
//! ```

use std::fmt;
use std::str::FromStr;

use super::CipherError;
use crate::rng::SplitMix64;

/// The 25 letters of the square, in default reading order.
pub const ALPHABET: &[u8; 25] = b"ABCDEFGHIKLMNOPQRSTUVWXYZ";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PegColor {
    White,
    Orange,
    Red,
    Green,
    Blue,
}

impl PegColor {
    pub const ALL: [PegColor; 5] = [
        PegColor::White,
        PegColor::Orange,
        PegColor::Red,
        PegColor::Green,
        PegColor::Blue,
    ];

    pub fn code(self) -> char {
        match self {
            PegColor::White => 'W',
            PegColor::Orange => 'O',
            PegColor::Red => 'R',
            PegColor::Green => 'G',
            PegColor::Blue => 'B',
        }
    }

    pub fn from_code(code: char) -> Option<PegColor> {
        PegColor::ALL
            .into_iter()
            .find(|c| c.code() == code.to_ascii_uppercase())
    }
}

impl fmt::Display for PegColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Row color first, then column color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorPair {
    pub row: PegColor,
    pub col: PegColor,
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.row, self.col)
    }
}

impl FromStr for ColorPair {
    type Err = CipherError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CipherError::BadPair(s.to_string());
        let mut chars = s.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(r), Some(c), None) => Ok(ColorPair {
                row: PegColor::from_code(r).ok_or_else(bad)?,
                col: PegColor::from_code(c).ok_or_else(bad)?,
            }),
            _ => Err(bad()),
        }
    }
}

fn letter_index(letter: char) -> Option<usize> {
    let upper = match letter.to_ascii_uppercase() {
        'J' => 'I',
        c => c,
    };
    ALPHABET.iter().position(|&b| b as char == upper)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PegKey {
    row_colors: [PegColor; 5],
    col_colors: [PegColor; 5],
    /// `layout[r][c]` is the letter in that cell.
    layout: [[u8; 5]; 5],
    /// Cell `(r, c)` of each letter of [`ALPHABET`].
    positions: [(u8, u8); 25],
}

impl PegKey {
    pub fn new(
        row_colors: [PegColor; 5],
        col_colors: [PegColor; 5],
        layout: [[u8; 5]; 5],
    ) -> Result<PegKey, CipherError> {
        for colors in [&row_colors, &col_colors] {
            if !is_permutation(colors) {
                return Err(CipherError::BadColorPermutation(format_colors(colors)));
            }
        }
        let mut positions = [None; 25];
        for (r, row) in layout.iter().enumerate() {
            for (c, &letter) in row.iter().enumerate() {
                let idx = letter_index(letter as char)
                    .filter(|_| letter != b'J' && letter.is_ascii_uppercase())
                    .ok_or(CipherError::BadKeyFormat(format!(
                        "{:?} cannot appear in the square",
                        letter as char
                    )))?;
                if positions[idx].replace((r as u8, c as u8)).is_some() {
                    return Err(CipherError::NonBijectiveLayout(letter as char));
                }
            }
        }
        Ok(PegKey {
            row_colors,
            col_colors,
            layout,
            // 25 distinct letters over 25 cells, so every slot is filled
            positions: positions.map(|p| p.expect("bijective layout")),
        })
    }

    /// White, orange, red, green, blue on both axes, letters in reading order.
    pub fn default_key() -> PegKey {
        let layout = std::array::from_fn(|r| std::array::from_fn(|c| ALPHABET[r * 5 + c]));
        PegKey::new(PegColor::ALL, PegColor::ALL, layout).expect("default key is well formed")
    }

    /// Deterministic key for `seed`: shuffles the row colors, then the column
    /// colors, then the 25 letters (see [`crate::rng`]).
    pub fn generate(seed: u64) -> PegKey {
        let mut rng = SplitMix64::new(seed);
        let mut rows = PegColor::ALL;
        let mut cols = PegColor::ALL;
        let mut letters = *ALPHABET;
        rng.shuffle(&mut rows);
        rng.shuffle(&mut cols);
        rng.shuffle(&mut letters);
        let layout = std::array::from_fn(|r| std::array::from_fn(|c| letters[r * 5 + c]));
        PegKey::new(rows, cols, layout).expect("shuffles preserve the invariants")
    }

    pub fn row_colors(&self) -> [PegColor; 5] {
        self.row_colors
    }

    pub fn col_colors(&self) -> [PegColor; 5] {
        self.col_colors
    }

    pub fn layout(&self) -> [[u8; 5]; 5] {
        self.layout
    }

    /// Pair for a letter; `J` shares `I`'s cell.
    pub fn pair(&self, letter: char) -> Option<ColorPair> {
        let (r, c) = self.positions[letter_index(letter)?];
        Some(ColorPair {
            row: self.row_colors[r as usize],
            col: self.col_colors[c as usize],
        })
    }

    pub fn letter(&self, pair: ColorPair) -> char {
        let r = self.row_colors.iter().position(|&c| c == pair.row);
        let c = self.col_colors.iter().position(|&c| c == pair.col);
        // both arrays are permutations of all five colors
        let (r, c) = (r.expect("row color"), c.expect("col color"));
        self.layout[r][c] as char
    }

    pub fn save(&self) -> String {
        let mut lines = vec![
            format!("ROWS {}", format_colors(&self.row_colors)),
            format!("COLS {}", format_colors(&self.col_colors)),
        ];
        lines.extend(
            self.layout
                .iter()
                .map(|row| String::from_utf8(row.to_vec()).expect("ascii")),
        );
        lines.join("\n")
    }

    pub fn load(text: &str) -> Result<PegKey, CipherError> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        if lines.len() != 7 {
            return Err(CipherError::BadKeyFormat(format!(
                "expected 7 lines, found {}",
                lines.len()
            )));
        }
        let rows = parse_color_line(lines[0], "ROWS")?;
        let cols = parse_color_line(lines[1], "COLS")?;
        let mut layout = [[0u8; 5]; 5];
        for (r, line) in lines[2..].iter().enumerate() {
            let letters: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
            if letters.len() != 5 || !letters.iter().all(char::is_ascii_uppercase) {
                return Err(CipherError::BadKeyFormat(format!(
                    "square row {} must hold five capital letters: {line:?}",
                    r + 1
                )));
            }
            for (c, letter) in letters.into_iter().enumerate() {
                layout[r][c] = letter as u8;
            }
        }
        PegKey::new(rows, cols, layout)
    }
}

impl Default for PegKey {
    fn default() -> Self {
        PegKey::default_key()
    }
}

fn is_permutation(colors: &[PegColor; 5]) -> bool {
    PegColor::ALL.iter().all(|c| colors.contains(c))
}

fn format_colors(colors: &[PegColor]) -> String {
    colors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_color_line(line: &str, tag: &str) -> Result<[PegColor; 5], CipherError> {
    let rest = line
        .strip_prefix(tag)
        .ok_or_else(|| CipherError::BadKeyFormat(format!("expected `{tag} ...`, got {line:?}")))?;
    let colors = rest
        .split_whitespace()
        .map(|tok| {
            let mut chars = tok.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => PegColor::from_code(c),
                _ => None,
            }
            .ok_or_else(|| CipherError::BadKeyFormat(format!("unknown peg color {tok:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let colors: [PegColor; 5] = colors
        .try_into()
        .map_err(|v: Vec<PegColor>| CipherError::BadColorPermutation(format_colors(&v)))?;
    if !is_permutation(&colors) {
        return Err(CipherError::BadColorPermutation(format_colors(&colors)));
    }
    Ok(colors)
}

/// One pair per letter; the whole sequence is reversed when `backwards`.
pub fn encrypt(word: &str, key: &PegKey, backwards: bool) -> Result<Vec<ColorPair>, CipherError> {
    let mut pairs = word
        .chars()
        .map(|c| key.pair(c).ok_or(CipherError::UnmappableCharacter(c)))
        .collect::<Result<Vec<_>, _>>()?;
    if backwards {
        pairs.reverse();
    }
    Ok(pairs)
}

pub fn decrypt(pairs: &[ColorPair], key: &PegKey, backwards: bool) -> String {
    let word: String = pairs.iter().map(|&p| key.letter(p)).collect();
    if backwards {
        word.chars().rev().collect()
    } else {
        word
    }
}

pub fn format_pairs(pairs: &[ColorPair]) -> String {
    pairs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Words of space-separated pairs, separated by `/` tokens.
pub fn parse_message(text: &str) -> Result<Vec<Vec<ColorPair>>, CipherError> {
    let mut words = vec![Vec::new()];
    for token in text.split_whitespace() {
        if token == "/" {
            words.push(Vec::new());
        } else {
            words.last_mut().expect("nonempty").push(token.parse()?);
        }
    }
    words.retain(|w| !w.is_empty());
    Ok(words)
}

pub fn format_message(words: &[Vec<ColorPair>]) -> String {
    words
        .iter()
        .map(|w| format_pairs(w))
        .collect::<Vec<_>>()
        .join(" / ")
}
