//! Inputs shared by the benchmarks.

use nimtri::Natural;

/// A value with `limbs` full 64-bit limbs and a deterministic bit pattern.
pub fn wide_natural(limbs: usize, seed: u64) -> Natural {
    let mut x = seed | 1;
    Natural::from_limbs((0..limbs).map(|_| {
        // xorshift64
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        x
    }))
}
