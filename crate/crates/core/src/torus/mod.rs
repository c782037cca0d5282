//! Tori in `GL(n, ℚ)` through their matrix algebras: the order `Λ`, its
//! discriminant, the canonical tensor and the discriminant-height.

pub mod closure;
pub mod embedded;
pub mod tensor;

pub use closure::{abstract_trace_gram, algebra_closure, matrix_min_poly, matrix_order};
pub use embedded::{
    conductor_conjugator, verify_height_equals_disc_sample, EmbeddedTorus, HeightReport,
    RegularBasis,
};
pub use tensor::{rational_tensor_height, CanonicalTensor};

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::numfield::NumberField;
    use crate::ratlin::matrix::{IntMatrix, RatMatrix};
    use crate::ratlin::poly::IntPolynomial;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(&IntPolynomial::from_i64(c)).unwrap()
    }

    fn gaussian() -> EmbeddedTorus {
        EmbeddedTorus::regular(&[(field(&[1, 0, 1]), 1)], RegularBasis::Integral).unwrap()
    }

    #[test]
    fn gaussian_family() {
        let t = gaussian();
        assert_eq!(t.disc(), &BigInt::from(4));
        assert_eq!(t.delta(), BigInt::from(4));
        let t2 = t.conjugate(&conductor_conjugator(2, 2)).unwrap();
        assert_eq!(t2.disc(), &BigInt::from(16));
        assert_eq!(t2.order_index(), &BigInt::from(2));
        let nu: Vec<BigInt> = [1, -4, 0, 0, -1, 4].map(BigInt::from).to_vec();
        assert_eq!(t2.tensor().nu.to_dense(), nu);
        assert_eq!(t2.delta(), BigInt::from(16));
        let t3 = t.conjugate(&conductor_conjugator(2, 3)).unwrap();
        assert_eq!(t3.delta(), BigInt::from(36));
        assert!(t3.height_report().passed());
    }

    #[test]
    fn scalar_torus() {
        let t = EmbeddedTorus::new(vec![RatMatrix::identity(2)]).unwrap();
        assert_eq!(t.disc(), &BigInt::from(1));
        assert_eq!(t.delta(), BigInt::from(1));
        let nu: Vec<BigInt> = [1, 0, 0, 1].map(BigInt::from).to_vec();
        assert_eq!(t.tensor().nu.to_dense(), nu);
    }

    #[test]
    fn cyclotomic_conductor_two() {
        let k = field(&[1, 1, 1, 1, 1]);
        let t = EmbeddedTorus::regular(&[(k, 1)], RegularBasis::Integral).unwrap();
        assert_eq!(t.disc(), &BigInt::from(125));
        let t = t.conjugate(&conductor_conjugator(4, 2)).unwrap();
        assert_eq!(t.order_index(), &BigInt::from(8));
        let r = t.height_report();
        assert_eq!(r.disc, BigInt::from(125 * 64));
        assert!(r.passed());
    }

    #[test]
    fn power_basis_embedding() {
        let t = EmbeddedTorus::regular(&[(field(&[3, 0, 1]), 1)], RegularBasis::Power).unwrap();
        assert_eq!(t.disc(), &BigInt::from(12));
        assert_eq!(t.order_index(), &BigInt::from(2));
        assert!(t.height_report().passed());
    }

    #[test]
    fn block_independence() {
        let a = EmbeddedTorus::regular(&[(field(&[1, 0, 1]), 1)], RegularBasis::Power).unwrap();
        let b = EmbeddedTorus::regular(&[(field(&[-5, 0, 1]), 1)], RegularBasis::Power).unwrap();
        let ab = EmbeddedTorus::regular(
            &[(field(&[1, 0, 1]), 1), (field(&[-5, 0, 1]), 1)],
            RegularBasis::Power,
        )
        .unwrap();
        assert_eq!(ab.disc(), &(a.disc() * b.disc()));
        assert!(ab.height_report().passed());
        let twice = EmbeddedTorus::regular(&[(field(&[1, 0, 1]), 2)], RegularBasis::Integral).unwrap();
        assert_eq!(twice.disc(), &BigInt::from(16));
        assert_eq!(twice.dimension(), 4);
    }

    fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
        let mut m = IntMatrix::identity(n);
        for _ in 0..6 {
            let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
            if i == j {
                continue;
            }
            let k = BigInt::from(rng.random_range(-2i64..=2));
            for c in 0..n {
                let add = &k * &m[(j, c)];
                m[(i, c)] += add;
            }
        }
        m.to_rat()
    }

    #[test]
    fn unimodular_conjugation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = gaussian().conjugate(&conductor_conjugator(2, 3)).unwrap();
        for _ in 0..10 {
            let g = random_unimodular(&mut rng, 2);
            let c = t.conjugate(&g).unwrap();
            assert_eq!(c.disc(), t.disc());
            assert_eq!(c.delta(), t.delta());
        }
    }

    #[test]
    fn conjugation_equivariance_of_tensor() {
        let t = gaussian();
        for g in [
            RatMatrix::from_i64(&[&[1, 0], &[0, 5]]),
            RatMatrix::from_i64(&[&[2, 1], &[0, 3]]),
            RatMatrix::from_i64(&[&[1, 1], &[1, -1]]),
        ] {
            let recomputed = t.conjugate(&g).unwrap();
            assert_eq!(t.transported_height(&g).unwrap(), recomputed.delta());
        }
    }
}
