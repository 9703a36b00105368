//! Seed derivation and random-stream construction.
//!
//! Every stochastic quantity in the library is drawn from a [`ChaCha8Rng`]
//! built by [`rng_from_seed`], and every seed is derived from a single master
//! seed through [`derived_seed`] with an explicit stream tag and counter.
//! Both functions are pure integer arithmetic, so runs are reproducible
//! across platforms and the derivation can be mirrored exactly in other
//! languages.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 mixing step: maps any 64-bit value to a well-mixed 64-bit
/// value.  This is the finalizer from the SplitMix64 generator, used here
/// purely as a hash.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from a master seed.
///
/// `stream` separates unrelated uses (channel gains, pilots per sweep point,
/// ...) and `counter` indexes repetitions within a stream.  Two rounds of
/// mixing keep distinct `(stream, counter)` pairs statistically independent.
pub fn derived_seed(master: u64, stream: u64, counter: u64) -> u64 {
    splitmix64(splitmix64(master ^ stream) ^ counter)
}

/// Expands a 64-bit seed into a full ChaCha8 generator.
///
/// The 256-bit key is filled with `splitmix64(seed ^ i)` for `i = 0..4`,
/// little-endian, rather than relying on the rand crate's default expansion,
/// so the mapping from seed to stream is pinned by this crate alone.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    for i in 0..4u64 {
        let word = splitmix64(seed ^ i);
        key[(i as usize) * 8..(i as usize + 1) * 8].copy_from_slice(&word.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn splitmix_reference_values() {
        // First outputs of the SplitMix64 sequence seeded with 0 and 1.
        assert_eq!(splitmix64(0), 0xE220A8397B1DCDAF);
        assert_eq!(splitmix64(1), 0x910A2DEC89025CC1);
    }

    #[test]
    fn derived_seeds_differ_across_streams_and_counters() {
        let master = 42;
        let a = derived_seed(master, 1, 0);
        let b = derived_seed(master, 2, 0);
        let c = derived_seed(master, 1, 1);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
    }

    #[test]
    fn rng_is_reproducible() {
        let mut r1 = rng_from_seed(7);
        let mut r2 = rng_from_seed(7);
        let x1: [f64; 4] = std::array::from_fn(|_| r1.random());
        let x2: [f64; 4] = std::array::from_fn(|_| r2.random());
        assert_eq!(x1, x2);
        let mut r3 = rng_from_seed(8);
        let y: f64 = r3.random();
        assert_ne!(x1[0], y);
    }
}
