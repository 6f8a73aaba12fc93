//! Pigpen symbol substitution.
//!
//! The default table uses the classical layout: `A`–`I` in the plain
//! tic-tac-toe grid, `J`–`R` in the dotted grid, `S`–`V` in the plain X and
//! `W`–`Z` in the dotted X. Cells are numbered in reading order.
//!
//! Token text: `#3` (plain grid, cell 3), `#3.` (dotted grid), `x2`, `x2.`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::CipherError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    Grid,
    Cross,
}

impl Frame {
    pub fn cells(self) -> u8 {
        match self {
            Frame::Grid => 9,
            Frame::Cross => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PigpenSymbol {
    pub frame: Frame,
    /// 1-based cell within the frame.
    pub cell: u8,
    pub dotted: bool,
}

impl fmt::Display for PigpenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.frame {
            Frame::Grid => '#',
            Frame::Cross => 'x',
        };
        write!(f, "{prefix}{}", self.cell)?;
        if self.dotted {
            f.write_str(".")?;
        }
        Ok(())
    }
}

impl FromStr for PigpenSymbol {
    type Err = CipherError;

    /// Accepts any cell number; range is checked against a table on decode.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CipherError::BadSymbol(s.to_string());
        let mut chars = s.chars();
        let frame = match chars.next() {
            Some('#') => Frame::Grid,
            Some('x') => Frame::Cross,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (digits, dotted) = match rest.strip_suffix('.') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let cell = digits.parse().map_err(|_| bad())?;
        Ok(PigpenSymbol {
            frame,
            cell,
            dotted,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigpenTable {
    encode: HashMap<char, PigpenSymbol>,
    decode: HashMap<PigpenSymbol, char>,
}

impl PigpenTable {
    /// `symbols[i]` is the symbol for letter `A + i`; must be injective.
    pub fn new(symbols: [PigpenSymbol; 26]) -> Result<PigpenTable, CipherError> {
        let mut encode = HashMap::with_capacity(26);
        let mut decode = HashMap::with_capacity(26);
        for (i, symbol) in symbols.into_iter().enumerate() {
            let letter = (b'A' + i as u8) as char;
            if decode.insert(symbol, letter).is_some() {
                return Err(CipherError::NonBijectiveTable(symbol.to_string()));
            }
            encode.insert(letter, symbol);
        }
        Ok(PigpenTable { encode, decode })
    }

    pub fn classic() -> PigpenTable {
        let symbols = std::array::from_fn(|i| {
            let (frame, cell, dotted) = match i {
                0..=8 => (Frame::Grid, i + 1, false),
                9..=17 => (Frame::Grid, i - 8, true),
                18..=21 => (Frame::Cross, i - 17, false),
                _ => (Frame::Cross, i - 21, true),
            };
            PigpenSymbol {
                frame,
                cell: cell as u8,
                dotted,
            }
        });
        PigpenTable::new(symbols).expect("classic layout is bijective")
    }

    pub fn symbol(&self, letter: char) -> Option<PigpenSymbol> {
        self.encode.get(&letter.to_ascii_uppercase()).copied()
    }

    pub fn letter(&self, symbol: &PigpenSymbol) -> Option<char> {
        self.decode.get(symbol).copied()
    }
}

impl Default for PigpenTable {
    fn default() -> Self {
        PigpenTable::classic()
    }
}

/// One symbol per letter. Anything that is not an ASCII letter is rejected.
pub fn encode(plaintext: &str, table: &PigpenTable) -> Result<Vec<PigpenSymbol>, CipherError> {
    plaintext
        .chars()
        .map(|c| {
            table
                .symbol(c)
                .ok_or(CipherError::UnmappableCharacter(c))
        })
        .collect()
}

pub fn decode(symbols: &[PigpenSymbol], table: &PigpenTable) -> Result<String, CipherError> {
    symbols
        .iter()
        .map(|s| {
            table
                .letter(s)
                .ok_or_else(|| CipherError::UnknownSymbol(s.to_string()))
        })
        .collect()
}

/// Encodes whitespace-separated words; tokens are space-separated and words
/// are joined by ` / `.
pub fn encode_message(text: &str, table: &PigpenTable) -> Result<String, CipherError> {
    let words = text
        .split_whitespace()
        .map(|w| {
            encode(w, table).map(|syms| {
                syms.iter()
                    .map(PigpenSymbol::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(words.join(" / "))
}

/// Inverse of [`encode_message`]; words come back separated by one space.
pub fn decode_message(text: &str, table: &PigpenTable) -> Result<String, CipherError> {
    let words = text
        .split('/')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| {
            let symbols = w
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<PigpenSymbol>, _>>()?;
            decode(&symbols, table)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(words.join(" "))
}
