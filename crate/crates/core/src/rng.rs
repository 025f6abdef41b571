//! Seeded 64-bit linear congruential generator.
//!
//! Corpora and criterion samples must be byte-identical across
//! implementations, so the recurrence is fixed here rather than delegated
//! to a library whose stream may change between versions:
//!
//! ```text
//! state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//! output = state' >> 32
//! ```
//!
//! Bounded draws take `output % bound`.

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
    pub const INCREMENT: u64 = 1_442_695_040_888_963_407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw from `0..bound`. Panics on `bound == 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        self.next_u32() as usize % bound
    }

    /// Draw from `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    /// `true` with probability `num / den`.
    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_fixed() {
        let mut rng = Lcg::new(0);
        // state1 = INCREMENT
        assert_eq!(rng.next_u32(), (Lcg::INCREMENT >> 32) as u32);
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        let xs: Vec<u32> = (0..16).map(|_| a.next_u32()).collect();
        let ys: Vec<u32> = (0..16).map(|_| b.next_u32()).collect();
        assert_eq!(xs, ys);
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = Lcg::new(7);
        for _ in 0..1000 {
            assert!(rng.below(5) < 5);
            let r = rng.range(2, 4);
            assert!((2..=4).contains(&r));
        }
    }
}
