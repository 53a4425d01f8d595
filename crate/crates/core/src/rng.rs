//! Seeded random streams.
//!
//! Every random draw in the crate comes from ChaCha8 seeded with a 64-bit
//! seed. Independent consumers of one seed use distinct ChaCha stream ids
//! (see the `*_STREAM` constants), and per-trial seeds are derived from a
//! base seed with SplitMix64.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sign vectors drawn by the learner.
pub const SAMPLE_STREAM: u64 = 0;
/// Additive noise added by simulated oracles.
pub const NOISE_STREAM: u64 = 1;
/// Random observables and coefficient ensembles.
pub const INSTANCE_STREAM: u64 = 2;
/// Random points in sampled sup-norm searches.
pub const SEARCH_STREAM: u64 = 3;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// SplitMix64 finalizer.
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` of a run with the given base seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    mix(base ^ mix(index))
}
