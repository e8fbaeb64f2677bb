//! Seed handling.
//!
//! Every experiment is driven by a single root seed. Independent streams are
//! carved out of it with ChaCha's 64-bit stream selector: the stream id packs
//! a purpose tag in the top 16 bits and a replica index in the low 48 bits, so
//! two different `(tag, replica)` pairs never share key-stream material.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// Purpose tags for [`stream`]. Values are part of the reproducibility
/// contract; do not renumber.
pub mod tag {
    pub const TREE: u16 = 1;
    pub const LABELS: u16 = 2;
    pub const MAP_POINTS: u16 = 3;
    pub const EXCURSION: u16 = 4;
    pub const SNAKE: u16 = 5;
    pub const SNAKE_POINTS: u16 = 6;
    pub const PLANE_RIGHT: u16 = 7;
    pub const PLANE_LEFT: u16 = 8;
    pub const PLANE_LABELS: u16 = 9;
    pub const HULL: u16 = 10;
    pub const XI: u16 = 11;
    pub const MISC: u16 = 12;
}

/// Generator seeded directly from `seed` on stream 0.
pub fn from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `(tag, replica)` derived from the root `seed`.
pub fn stream(seed: u64, tag: u16, replica: u64) -> Rng {
    debug_assert!(replica < (1 << 48));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((tag as u64) << 48) | (replica & ((1 << 48) - 1)));
    rng
}

/// Derive a fresh 64-bit seed for a sub-computation from a stream.
pub fn child_seed(seed: u64, tag: u16, replica: u64) -> u64 {
    use rand::RngCore;
    stream(seed, tag, replica).next_u64()
}
