//! Deterministic pseudo-random numbers for reproducible simulations.
//!
//! A single fixed generator keeps descent traces byte-identical across
//! platforms and releases: SplitMix64 (Steele, Lea & Flood's 64-bit mixer),
//! which has no platform-dependent state and needs three lines of update
//! logic. Not cryptographic; not meant to be.

/// SplitMix64 generator. The full state is one `u64`, so seeding is trivial
/// and every seed gives an independent-looking stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n`. Plain modulo; the bias for n far below 2^64
    /// is unobservable at the scales used here and keeps the stream simple to
    /// describe in trace headers.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below(0)");
        self.next_u64() % n
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
