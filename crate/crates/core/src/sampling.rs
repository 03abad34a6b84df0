//! Deterministic sampling keyed by `(seed, key)`.
//!
//! Each draw gets its own generator seeded from a hash of the run seed and a
//! stable key (usually an instance id), so the samples do not depend on the
//! order in which workers reach the instances.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::tree::Orientation;

pub fn keyed_rng(seed: u64, key: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(key.as_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

/// `count` distinct indices from `0..len`, ascending.
pub fn sample_indices(seed: u64, key: &str, len: usize, count: usize) -> Vec<usize> {
    if count >= len {
        return (0..len).collect();
    }
    let mut rng = keyed_rng(seed, key);
    let mut v = index::sample(&mut rng, len, count).into_vec();
    v.sort_unstable();
    v
}

/// The canonical orientation followed by up to `count` distinct
/// non-canonical ones, in mask order.
pub fn sampled_orientations(seed: u64, key: &str, edge_count: usize, count: usize) -> Vec<Orientation> {
    let others = (1usize << edge_count) - 1;
    let mut out = vec![Orientation::canonical(edge_count)];
    out.extend(
        sample_indices(seed, key, others, count)
            .into_iter()
            .map(|i| Orientation::from_mask(edge_count, i as u64 + 1)),
    );
    out
}
