//! Seeding contract.
//!
//! Every random draw in the crate comes from ChaCha8 (`rand_chacha`).
//! A run is identified by a master seed; independent work items (trials,
//! models within a trial, grid cells) get child keys derived with the
//! SplitMix64 finalizer, so the stream a trial sees depends only on
//! `(master seed, trial index)` and never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The project-wide generator.
pub type Rng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A position in the tree of derived streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey(u64);

impl StreamKey {
    pub fn new(seed: u64) -> Self {
        StreamKey(seed)
    }

    /// Derives the key of child `index`.
    pub fn child(self, index: u64) -> Self {
        StreamKey(splitmix64(self.0 ^ splitmix64(index.wrapping_add(0x5851_F42D_4C95_7F2D))))
    }

    pub fn rng(self) -> Rng {
        Rng::seed_from_u64(self.0)
    }

    pub fn raw(self) -> u64 {
        self.0
    }
}

/// Integer threshold `t` with `P(next_u64() < t) = prob` up to `2^-64`.
#[inline]
pub(crate) fn bernoulli_threshold(prob: f64) -> u64 {
    if prob <= 0.0 {
        0
    } else if prob >= 1.0 {
        u64::MAX
    } else {
        (prob * 18_446_744_073_709_551_616.0) as u64
    }
}

#[cfg(test)]
mod tests {
    use rand::RngCore;

    use super::*;

    #[test]
    fn children_are_distinct_and_stable() {
        let root = StreamKey::new(7);
        assert_ne!(root.child(0), root.child(1));
        assert_ne!(root.child(0).child(1), root.child(1).child(0));
        assert_eq!(root.child(3).rng().next_u64(), root.child(3).rng().next_u64());
    }

    #[test]
    fn thresholds() {
        assert_eq!(bernoulli_threshold(0.0), 0);
        assert_eq!(bernoulli_threshold(0.5), 1 << 63);
        assert_eq!(bernoulli_threshold(1.0), u64::MAX);
    }
}
