//! SplitMix64, fixed here so seeds reproduce across platforms and languages.
//!
//! ```text
//! state  ← state + 0x9E3779B97F4A7C15
//! z      ← (state ⊕ (state ≫ 30)) · 0xBF58476D1CE4E5B9
//! z      ← (z ⊕ (z ≫ 27)) · 0x94D049BB133111EB
//! output ← z ⊕ (z ≫ 31)
//! ```
//!
//! All arithmetic is wrapping on 64 bits. Uniform reals take the top 53 bits,
//! `(x ≫ 11) · 2⁻⁵³`; bounded integers use the multiply-shift map
//! `⌊x · n / 2⁶⁴⌋`; a fair coin is the top bit.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform-ish in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }
}
