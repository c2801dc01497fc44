//! Deterministic sub-seed derivation.
//!
//! Every random stream in a trial is keyed by `(master, role, index)` and
//! mixed with the SplitMix64 finalizer, so results never depend on the order
//! in which parallel tasks happen to run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The purpose a random stream serves inside a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Role {
    Trial = 1,
    SpherePoints = 2,
    InsertionOrder = 3,
    VertexSample = 4,
    Objectives = 5,
    Resample = 6,
    Deletion = 7,
    Center = 8,
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed for stream `role` of item `index` under `master`.
pub fn derive_seed(master: u64, role: Role, index: u64) -> u64 {
    let a = mix(master.wrapping_add(GOLDEN));
    let b = mix(a ^ (role as u64).wrapping_mul(GOLDEN));
    mix(b ^ index.wrapping_add(1).wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
