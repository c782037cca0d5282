use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torusdisc::numfield::NumberField;
use torusdisc::ratlin::{IntPolynomial, RatMatrix};
use torusdisc::torus::{conductor_conjugator, EmbeddedTorus, RegularBasis};

fn field(c: &[i64]) -> NumberField {
    NumberField::new(&IntPolynomial::from_i64(c)).unwrap()
}

fn small_fields() -> Vec<NumberField> {
    [&[1i64, 0, 1][..], &[-1, -1, 1], &[1, 1, 1], &[-2, 0, 1], &[-3, 0, 1], &[5, 0, 1], &[-2, 0, 0, 1]]
        .iter()
        .map(|c| field(c))
        .collect()
}

/// Product of random elementary matrices, determinant ±1.
fn unimodular(n: usize, seed: u64) -> RatMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = RatMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            continue;
        }
        let k = BigRational::from_integer(rng.random_range(-2i64..=2).into());
        let mut e = RatMatrix::identity(n);
        e[(i, j)] = k;
        m = m.mul(&e);
    }
    if rng.random_bool(0.5) {
        let mut s = RatMatrix::identity(n);
        s[(0, 0)] = BigRational::from_integer((-1).into());
        m = m.mul(&s);
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn height_equals_disc(i in 0usize..7, m in 1i64..=12, seed in any::<u64>()) {
        let k = small_fields()[i].clone();
        let n = k.degree();
        let t = EmbeddedTorus::regular(&[(k, 1)], RegularBasis::Integral).unwrap();
        let t = t.conjugate(&conductor_conjugator(n, m)).unwrap();
        prop_assert_eq!(&t.delta(), t.disc());
        let index = t.order_index().clone();
        prop_assert_eq!(t.disc(), &(t.etale_disc() * &index * &index));
        let u = t.conjugate(&unimodular(n, seed)).unwrap();
        prop_assert_eq!(u.disc(), t.disc());
        prop_assert_eq!(u.delta(), t.delta());
    }

    #[test]
    fn transported_height_matches(i in 0usize..6, m in 1i64..=6) {
        let k = small_fields()[i].clone();
        let t = EmbeddedTorus::regular(&[(k, 1)], RegularBasis::Integral).unwrap();
        let g = conductor_conjugator(2, m);
        prop_assert_eq!(t.transported_height(&g).unwrap(), t.conjugate(&g).unwrap().delta());
    }

    #[test]
    fn block_independence(i in 0usize..6, j in 0usize..6) {
        let (a, b) = (small_fields()[i].clone(), small_fields()[j].clone());
        let ta = EmbeddedTorus::regular(&[(a.clone(), 1)], RegularBasis::Power).unwrap();
        let tb = EmbeddedTorus::regular(&[(b.clone(), 1)], RegularBasis::Power).unwrap();
        let tab = EmbeddedTorus::regular(&[(a, 1), (b, 1)], RegularBasis::Power).unwrap();
        prop_assert_eq!(tab.disc(), &(ta.disc() * tb.disc()));
        prop_assert_eq!(tab.delta(), tab.disc().clone());
        prop_assert!(!tab.disc().is_zero());
    }
}

#[test]
fn identity_torus_is_trivial() {
    let t = EmbeddedTorus::new(vec![RatMatrix::identity(3)]).unwrap();
    assert_eq!(t.delta(), BigInt::from(1));
    assert_eq!(t.disc(), &BigInt::from(1));
}
