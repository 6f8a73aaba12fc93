//! Seeded generator used by key generation and random mosaics.
//!
//! The algorithm is fixed so that a seed produces the same output in any
//! implementation:
//!
//! * **SplitMix64.** The state starts at the seed. Each draw adds
//!   `0x9E3779B97F4A7C15` (wrapping), then mixes `z = state`:
//!   `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
//!   `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`,
//!   `z ^ (z >> 31)` (all multiplications wrapping).
//! * **Bounded draws** `below(n)`: let `t = (2^64 - n) mod n`; draw until
//!   the value `x` satisfies `x >= t`, return `x mod n`.
//! * **Shuffles** are Fisher–Yates from the back: for `i` from `len - 1`
//!   down to 1, swap items `i` and `below(i + 1)`.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % n;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
