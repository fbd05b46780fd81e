//! SplitMix64: the deterministic generator behind all seeded sampling.
//!
//! Chosen because it is splittable (independent streams are derived by
//! striding the seed with the golden-ratio increment), trivially
//! portable, and fully specified by a dozen lines of integer
//! arithmetic, so identical seeds reproduce identical samples on every
//! platform and at every thread count.

/// Golden-ratio increment used both for state advance and stream derivation.
pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 generator state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for item `index` under a common `seed`. Used
    /// so that parallel samplers agree with the sequential one.
    pub fn for_stream(seed: u64, index: u64) -> Self {
        SplitMix64::new(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// High 32 bits of the next output.
    pub fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }
}
