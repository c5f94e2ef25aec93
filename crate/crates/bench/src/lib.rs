//! Shared fixtures for the criterion benchmarks.

use dirac_pmf::{BitPattern, Dataset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded uniform dataset plus `queries` uniform query patterns.
pub fn fixture(
    length: usize,
    samples: usize,
    queries: usize,
    seed: u64,
) -> (Dataset, Vec<BitPattern>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = Dataset::uniform(length, samples, &mut rng).expect("valid length");
    let q = (0..queries)
        .map(|_| BitPattern::from_word(rng.random::<u64>(), length).expect("valid length"))
        .collect();
    (d, q)
}
