//! Shift cipher and its frequency-analysis attack.

use std::fmt;

use super::CipherError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaesarKey(u8);

impl CaesarKey {
    pub fn new(shift: u8) -> Result<CaesarKey, CipherError> {
        if shift < 26 {
            Ok(CaesarKey(shift))
        } else {
            Err(CipherError::BadShift(i64::from(shift)))
        }
    }

    pub fn shift(self) -> u8 {
        self.0
    }

    fn inverse(self) -> CaesarKey {
        CaesarKey((26 - self.0) % 26)
    }
}

impl fmt::Display for CaesarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn shift_char(ch: char, shift: u8) -> char {
    let base = match ch {
        'A'..='Z' => b'A',
        'a'..='z' => b'a',
        _ => return ch,
    };
    (base + (ch as u8 - base + shift) % 26) as char
}

/// Shifts ASCII letters forward, keeping case; everything else is copied.
pub fn encrypt(plaintext: &str, key: CaesarKey) -> String {
    plaintext.chars().map(|c| shift_char(c, key.0)).collect()
}

pub fn decrypt(ciphertext: &str, key: CaesarKey) -> String {
    encrypt(ciphertext, key.inverse())
}

/// Relative letter frequencies, A to Z, summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable([f64; 26]);

impl FrequencyTable {
    /// Normalizes `weights`; every weight must be positive and finite.
    pub fn new(weights: [f64; 26]) -> Result<FrequencyTable, CipherError> {
        if let Some(i) = weights.iter().position(|w| !w.is_finite() || *w <= 0.0) {
            return Err(CipherError::BadFrequencyTable(format!(
                "weight for {} must be positive",
                (b'A' + i as u8) as char
            )));
        }
        let total: f64 = weights.iter().sum();
        Ok(FrequencyTable(weights.map(|w| w / total)))
    }

    /// English letter frequencies.
    pub fn english() -> FrequencyTable {
        FrequencyTable::new([
            8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025,
            2.406, 6.749, 7.507, 1.929, 0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150,
            1.974, 0.074,
        ])
        .expect("positive weights")
    }

    /// Reads lines of `<letter> <weight>`. Blank lines and `#` comments are
    /// skipped; all 26 letters must appear exactly once.
    pub fn parse(text: &str) -> Result<FrequencyTable, CipherError> {
        let mut weights = [f64::NAN; 26];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |why: &str| CipherError::BadFrequencyTable(format!("line {}: {why}", i + 1));
            let mut parts = line.split_whitespace();
            let (Some(letter), Some(weight), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(bad("expected `<letter> <weight>`"));
            };
            let mut chars = letter.chars();
            let idx = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() => {
                    (c.to_ascii_uppercase() as u8 - b'A') as usize
                }
                _ => return Err(bad("not a letter")),
            };
            if !weights[idx].is_nan() {
                return Err(bad("letter repeated"));
            }
            weights[idx] = weight.parse().map_err(|_| bad("weight is not a number"))?;
        }
        if let Some(i) = weights.iter().position(|w| w.is_nan()) {
            return Err(CipherError::BadFrequencyTable(format!(
                "no weight for {}",
                (b'A' + i as u8) as char
            )));
        }
        FrequencyTable::new(weights)
    }

    pub fn frequency(&self, letter_index: usize) -> f64 {
        self.0[letter_index]
    }
}

impl Default for FrequencyTable {
    fn default() -> Self {
        FrequencyTable::english()
    }
}

fn histogram(text: &str) -> [u64; 26] {
    let mut counts = [0u64; 26];
    for ch in text.chars().filter(char::is_ascii_alphabetic) {
        counts[(ch.to_ascii_uppercase() as u8 - b'A') as usize] += 1;
    }
    counts
}

/// Pearson's chi-squared statistic of a letter histogram against `table`.
pub fn chi_squared(counts: &[u64; 26], table: &FrequencyTable) -> f64 {
    let total: u64 = counts.iter().sum();
    counts
        .iter()
        .enumerate()
        .map(|(i, &observed)| {
            let expected = total as f64 * table.frequency(i);
            let d = observed as f64 - expected;
            d * d / expected
        })
        .sum()
}

/// Scores every shift by the chi-squared fit of the decryption to `table`,
/// best (lowest) first. Ties keep shift order.
pub fn crack(
    ciphertext: &str,
    table: &FrequencyTable,
) -> Result<Vec<(CaesarKey, f64)>, CipherError> {
    let counts = histogram(ciphertext);
    if counts.iter().all(|&c| c == 0) {
        return Err(CipherError::NoLetters);
    }
    let mut ranked: Vec<(CaesarKey, f64)> = (0..26u8)
        .map(|shift| {
            // decrypting by `shift` moves ciphertext letter i to i - shift
            let mut rotated = [0u64; 26];
            for (i, &c) in counts.iter().enumerate() {
                rotated[(i + 26 - shift as usize) % 26] = c;
            }
            (CaesarKey(shift), chi_squared(&rotated, table))
        })
        .collect();
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(ranked)
}
