//! Seeded random number generation.
//!
//! Every sampler draws from [`SeededRng`] (ChaCha8). Batch samplers give item
//! `i` its own stream seeded by [`derive_seed`]`(seed, i)`, so results do not
//! depend on how work is split across threads.

use num_bigint::BigUint;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for worker or item `index` derived from a base seed.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(0x632B_E59B_D9B4_E019)))
}

/// Uniform integer in `[0, bound)` by rejection on the bit length of `bound`.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(bound.bits() > 0, "empty range");
    if let Ok(b) = u64::try_from(bound) {
        return BigUint::from(rng.random_range(0..b));
    }
    let bits = bound.bits();
    let words = bits.div_ceil(64) as usize;
    let top_mask = if bits % 64 == 0 {
        u64::MAX
    } else {
        (1u64 << (bits % 64)) - 1
    };
    loop {
        let mut digits: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
        *digits.last_mut().unwrap() &= top_mask;
        let candidate = BigUint::from_slice(
            &digits
                .iter()
                .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                .collect::<Vec<_>>(),
        );
        if &candidate < bound {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_seeds_differ_and_repeat() {
        assert_eq!(derive_seed(7, 3), derive_seed(7, 3));
        assert_ne!(derive_seed(7, 3), derive_seed(7, 4));
        assert_ne!(derive_seed(7, 3), derive_seed(8, 3));
    }

    #[test]
    fn uniform_below_big_bound() {
        let bound = BigUint::from(3u32) << 100usize;
        let mut rng = rng_from_seed(1);
        let mut high = 0;
        for _ in 0..2000 {
            let x = uniform_below(&mut rng, &bound);
            assert!(x < bound);
            if x >= (BigUint::from(3u32) << 99usize) {
                high += 1;
            }
        }
        // roughly half should land in the upper half
        assert!((800..1200).contains(&high), "{high}");
    }
}
