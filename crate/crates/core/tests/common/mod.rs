#![allow(dead_code)]

pub mod corpus;

use unplugged::cipher::caesar::FrequencyTable;
use unplugged::grid::{Color, Inventory, Mosaic};
use unplugged::rng::SplitMix64;
use unplugged::sim::{SimCommand, COLUMNS};
use unplugged::turtle::{Canvas, Direction, Instruction, TurtleProgram};

/// 120 characters of plain English used to check the Caesar attack.
pub const REFERENCE_SENTENCE: &str = "It was a bright cold day in April, and the clocks were striking \
thirteen while the children walked home from the school.";

pub fn pick<T: Copy>(rng: &mut SplitMix64, items: &[T]) -> T {
    items[rng.below(items.len() as u64) as usize]
}

pub fn random_color(rng: &mut SplitMix64) -> Color {
    pick(rng, &Color::ALL)
}

/// Gravity-valid mosaic whose filled rows are complete: the bottom `filled`
/// rows are full, the rest empty.
pub fn random_full_row_mosaic(rng: &mut SplitMix64, max_rows: usize) -> Mosaic {
    let rows = 1 + rng.below(max_rows as u64) as usize;
    let filled = 1 + rng.below(rows as u64) as usize;
    let mut m = Mosaic::new(rows, COLUMNS).unwrap();
    // short runs are more interesting than independent cells
    for r in 0..filled {
        let mut color = random_color(rng);
        for c in 0..COLUMNS {
            if rng.below(3) == 0 {
                color = random_color(rng);
            }
            m.set(r, c, Some(color));
        }
    }
    m
}

/// Gravity-valid mosaic for the machine that fits the default inventory.
pub fn random_machine_mosaic(rng: &mut SplitMix64, rows: usize) -> Mosaic {
    let inv = Inventory::default();
    let mut left = Color::ALL.map(|c| inv.cap(c));
    let mut m = Mosaic::new(rows, COLUMNS).unwrap();
    for c in 0..COLUMNS {
        let h = rng.below(rows as u64 + 1) as usize;
        for r in 0..h {
            let options: Vec<Color> = Color::ALL
                .into_iter()
                .filter(|col| left[col.index()] > 0)
                .collect();
            let color = pick(rng, &options);
            left[color.index()] -= 1;
            m.set(r, c, Some(color));
        }
    }
    m
}

pub fn random_canvas(rng: &mut SplitMix64, max_side: usize) -> Canvas {
    let w = 1 + rng.below(max_side as u64) as usize;
    let h = 1 + rng.below(max_side as u64) as usize;
    // sparsity anywhere from empty to full
    let fill = rng.below(101);
    let mut canvas = Canvas::new(w, h).unwrap();
    for r in 0..h {
        for c in 0..w {
            if rng.below(100) < fill {
                canvas.set(r, c, Some(random_color(rng)));
            }
        }
    }
    canvas
}

pub fn random_program(rng: &mut SplitMix64, max_len: usize) -> TurtleProgram {
    let dirs = [Direction::N, Direction::S, Direction::E, Direction::O];
    let len = rng.below(max_len as u64 + 1) as usize;
    // a small palette makes mergeable neighbours common
    let palette = [None, Some(Color::Red), Some(Color::Blue)];
    let body = (0..len)
        .map(|_| Instruction {
            direction: pick(rng, &dirs),
            paint: pick(rng, &palette),
            repeat: 1 + rng.below(3) as u32,
        })
        .collect();
    let start_paint = if rng.below(2) == 0 {
        None
    } else {
        Some(random_color(rng))
    };
    TurtleProgram { start_paint, body }
}

pub fn random_feed(rng: &mut SplitMix64, max_len: usize) -> Vec<Color> {
    let inv = Inventory::default();
    let mut left = Color::ALL.map(|c| inv.cap(c));
    let len = rng.below(max_len as u64 + 1) as usize;
    let mut feed = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<Color> = Color::ALL
            .into_iter()
            .filter(|col| left[col.index()] > 0)
            .collect();
        let color = pick(rng, &options);
        left[color.index()] -= 1;
        feed.push(color);
    }
    feed
}

pub fn random_commands(rng: &mut SplitMix64, len: usize) -> Vec<SimCommand> {
    (0..len)
        .map(|_| match rng.below(10) {
            0..=5 => SimCommand::Launch(1 + rng.below(COLUMNS as u64) as usize),
            6 | 7 => SimCommand::Exit,
            8 => SimCommand::ResetColumn(1 + rng.below(COLUMNS as u64) as usize),
            _ => SimCommand::Peek,
        })
        .collect()
}

pub fn random_word(rng: &mut SplitMix64, max_len: usize, allow_j: bool) -> String {
    let len = rng.below(max_len as u64 + 1) as usize;
    (0..len)
        .map(|_| loop {
            let ch = (b'A' + rng.below(26) as u8) as char;
            if allow_j || ch != 'J' {
                break ch;
            }
        })
        .collect()
}

/// Brute-force Caesar attack kept apart from the library's: decrypts the
/// text for each shift, counts letters from scratch and computes Pearson's
/// statistic directly.
pub fn brute_force_chi_squared(ciphertext: &str, table: &FrequencyTable) -> Vec<f64> {
    (0..26u8)
        .map(|shift| {
            let plain: String = ciphertext
                .chars()
                .filter(|c| c.is_ascii_alphabetic())
                .map(|c| {
                    let x = c.to_ascii_uppercase() as u8 - b'A';
                    (b'A' + (x + 26 - shift) % 26) as char
                })
                .collect();
            let n = plain.len() as f64;
            (0..26)
                .map(|i| {
                    let letter = (b'A' + i as u8) as char;
                    let observed = plain.chars().filter(|&c| c == letter).count() as f64;
                    let expected = n * table.frequency(i);
                    (observed - expected).powi(2) / expected
                })
                .sum()
        })
        .collect()
}
