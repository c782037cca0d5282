//! Conjugator families.
//!
//! Random members come from `ChaCha8Rng::seed_from_u64(seed)` with stream
//! `(item << 32) | member`, so each member is reproducible on its own and
//! independent of evaluation order.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torusdisc::ratlin::RatMatrix;

pub fn member_rng(seed: u64, item: usize, member: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((item as u64) << 32) | member as u64);
    rng
}

/// Product of `3n` elementary matrices `I + k·E_ij` (`|k| ≤ bound`), then a
/// random sign on the first coordinate. Determinant `±1`.
pub fn unimodular_random(n: usize, seed: u64, item: usize, member: usize, bound: i64) -> RatMatrix {
    let mut rng = member_rng(seed, item, member);
    let mut m = RatMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n - 1);
        let j = if j >= i { j + 1 } else { j };
        let k = rng.random_range(-bound..=bound);
        let mut e = RatMatrix::identity(n);
        e[(i, j)] = BigRational::from_integer(k.into());
        m = m.mul(&e);
    }
    if rng.random_bool(0.5) {
        let mut s = RatMatrix::identity(n);
        s[(0, 0)] = BigRational::from_integer((-1).into());
        m = m.mul(&s);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn unimodular_and_reproducible() {
        for member in 0..20 {
            let a = unimodular_random(3, 7, 0, member, 3);
            assert_eq!(a.det().abs(), BigRational::from_integer(1.into()));
            assert!(a.is_integral());
            assert_eq!(a, unimodular_random(3, 7, 0, member, 3));
        }
        assert_ne!(unimodular_random(3, 7, 0, 0, 3), unimodular_random(3, 7, 0, 1, 3));
    }
}
