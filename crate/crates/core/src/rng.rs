//! Seeded randomness.
//!
//! All randomized paths draw from xoshiro256++ seeded through SplitMix64
//! (`seed_from_u64`), which gives the same stream on every platform.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

pub type SeededRng = Xoshiro256PlusPlus;

pub fn seeded_rng(seed: u64) -> SeededRng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}
