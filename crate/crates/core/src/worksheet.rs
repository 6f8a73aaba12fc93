//! Printable lesson material: coding-card exercises, Peg Code exercises and
//! random mosaics for teachers who need fresh inputs.

use thiserror::Error;

use crate::card::{CardError, CodingCard};
use crate::cipher::peg::{self, PegKey};
use crate::cipher::CipherError;
use crate::grid::{Color, Inventory, Mosaic};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Worksheet {
    pub title: String,
    /// Exercise blocks, printed in order and separated by blank lines.
    pub body: Vec<String>,
    pub answer_key: Option<String>,
}

impl Worksheet {
    /// Plain monospace text. The answer key is printed only when
    /// `with_answers` is set.
    pub fn render(&self, with_answers: bool) -> String {
        let mut out = self.title.clone();
        for block in &self.body {
            out.push_str("\n\n");
            out.push_str(block);
        }
        if with_answers {
            if let Some(key) = &self.answer_key {
                out.push_str("\n\nANSWERS");
                if !key.is_empty() {
                    out.push('\n');
                    out.push_str(key);
                }
            }
        }
        out
    }
}

/// Exercise: write the program for a mosaic. The answer is its canonical card.
pub fn cards(mosaic: &Mosaic) -> Result<Worksheet, CardError> {
    let card = CodingCard::encode(mosaic)?;
    let body = if card.rows().is_empty() {
        Vec::new()
    } else {
        vec![mosaic.render()]
    };
    Ok(Worksheet {
        title: "Write the coding card for this mosaic".into(),
        body,
        answer_key: Some(card.print()),
    })
}

/// Exercise: decode each word. With `backwards`, both the pairs and the
/// written solution run right to left.
pub fn cipher(words: &[&str], key: &PegKey, backwards: bool) -> Result<Worksheet, CipherError> {
    let mut exercises = Vec::with_capacity(words.len());
    let mut answers = Vec::with_capacity(words.len());
    for (i, word) in words.iter().enumerate() {
        let pairs = peg::encrypt(word, key, backwards)?;
        let upper = word.to_ascii_uppercase();
        let answer: String = if backwards {
            upper.chars().rev().collect()
        } else {
            upper
        };
        exercises.push(format!("{}. {}", i + 1, peg::format_pairs(&pairs)));
        answers.push(format!("{}. {}", i + 1, answer));
    }
    let body = if exercises.is_empty() {
        Vec::new()
    } else {
        vec![exercises.join("\n")]
    };
    Ok(Worksheet {
        title: "Decode the Peg Code words".into(),
        body,
        answer_key: Some(answers.join("\n")),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomMosaicError {
    #[error("mosaic dimensions must be positive, got {rows}x{columns}")]
    BadDimensions { rows: usize, columns: usize },
    #[error("{cells} cells exceed the {available} balls in the inventory")]
    TooManyBalls { cells: usize, available: usize },
}

/// A gravity-valid mosaic that fits the default inventory.
///
/// Column heights are drawn uniformly from `0..=rows` left to right (all
/// equal to `rows` when `full`), then cells are colored bottom row first,
/// left to right, each drawn uniformly from the colors with balls left.
pub fn random_mosaic(
    seed: u64,
    rows: usize,
    columns: usize,
    full: bool,
) -> Result<Mosaic, RandomMosaicError> {
    if rows == 0 || columns == 0 {
        return Err(RandomMosaicError::BadDimensions { rows, columns });
    }
    let mut rng = SplitMix64::new(seed);
    let heights: Vec<usize> = (0..columns)
        .map(|_| {
            if full {
                rows
            } else {
                rng.below(rows as u64 + 1) as usize
            }
        })
        .collect();
    let cells: usize = heights.iter().sum();
    let inventory = Inventory::default();
    if cells > inventory.total() {
        return Err(RandomMosaicError::TooManyBalls {
            cells,
            available: inventory.total(),
        });
    }
    let mut left = Color::ALL.map(|c| inventory.cap(c));
    let mut mosaic = Mosaic::new(rows, columns).expect("positive dimensions");
    for r in 0..rows {
        for (c, &h) in heights.iter().enumerate() {
            if r >= h {
                continue;
            }
            let choices: Vec<Color> = Color::ALL
                .into_iter()
                .filter(|col| left[col.index()] > 0)
                .collect();
            let color = choices[rng.below(choices.len() as u64) as usize];
            left[color.index()] -= 1;
            mosaic.set(r, c, Some(color));
        }
    }
    Ok(mosaic)
}
