/// 64-bit linear congruential generator with Knuth's MMIX constants:
/// `state <- 6364136223846793005 * state + 1442695040888963407 (mod 2^64)`.
///
/// The outputs are the high 32 bits of the new state, which avoids the
/// short periods of the low bits. Trivial to port, so corpora can be
/// regenerated bit for bit elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in `0..n` (modulo bias is irrelevant here). `n > 0`.
    pub fn below(&mut self, n: u32) -> u32 {
        self.next_u32() % n
    }

    /// Uniform-ish in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u32) as i64
    }
}
