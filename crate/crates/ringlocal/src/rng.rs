//! Seeded, reproducible randomness.
//!
//! The generator choice is part of the interface: a ChaCha8 stream keyed by
//! the seed, with bounded draws taken as `next_u64() % bound` and shuffles
//! done by the Fisher-Yates walk below. Identical seeds therefore produce
//! identical instances across runs and platforms.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Id, RingInstance};

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-enough index in `[0, bound)`; the modulo bias is irrelevant
    /// for the instance sizes involved and keeps the draw portable.
    pub fn index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// In-place Fisher-Yates shuffle, walking from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

/// Random ring on identifiers `{1..n}`: a seeded Fisher-Yates permutation.
pub fn random_ring(n: usize, seed: u64) -> RingInstance {
    assert!(n >= 1, "ring needs at least one node");
    let mut ids: Vec<Id> = (1..=n as Id).collect();
    SeededRng::new(seed).shuffle(&mut ids);
    RingInstance::new(ids).expect("permutation of 1..=n is valid")
}

/// Random ring whose identifiers are distinct draws from the full `2^bits`
/// universe.
pub fn random_ring_in_universe(n: usize, seed: u64, bits: u32) -> RingInstance {
    assert!(n >= 1, "ring needs at least one node");
    let mut rng = SeededRng::new(seed);
    let mask = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
    let mut seen = std::collections::HashSet::with_capacity(n);
    let mut ids = Vec::with_capacity(n);
    while ids.len() < n {
        let id = rng.next_u64() & mask;
        if seen.insert(id) {
            ids.push(id);
        }
    }
    RingInstance::with_universe_bits(ids, bits).expect("distinct in-universe ids")
}
