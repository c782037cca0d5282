use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use torusdisc::adelic::{local_unit_index, power_index, CountMethod, FiniteRing, OrderPair, DEFAULT_BUDGET};
use torusdisc::numfield::NumberField;
use torusdisc::ratlin::IntPolynomial;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn field(c: &[i64]) -> NumberField {
    NumberField::new(&IntPolynomial::from_i64(c)).unwrap()
}

fn fields() -> Vec<NumberField> {
    vec![field(&[1, 0, 1]), field(&[-1, -1, 1]), field(&[1, 1, 1]), field(&[-2, 0, 0, 1])]
}

/// Units of `O/p^kO` and of its subring, by direct enumeration.
fn brute_force_units(pair: &OrderPair, p: u64, k: u32) -> (u64, u64) {
    let ring = FiniteRing::new(pair, p, k).unwrap();
    let (mut all, mut sub) = (0u64, 0u64);
    ring.for_each(|x| {
        if ring.is_unit(x) {
            all += 1;
            if ring.in_sub(x) {
                sub += 1;
            }
        }
    });
    (all, sub)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn support_and_divisibility(i in 0usize..3, m in 1u64..=30, pi in 0usize..6) {
        let pair = OrderPair::conductor(&fields()[i], m).unwrap();
        let p = BigInt::from(PRIMES[pi]);
        let r = local_unit_index(&pair, &p, CountMethod::Auto, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(r.index.is_one(), !pair.index().is_multiple_of(&p));
        prop_assert!(r.units_o.is_multiple_of(&r.units_lambda));
        prop_assert_eq!(&r.units_o / &r.units_lambda, r.index);
    }

    #[test]
    fn structural_matches_enumeration(i in 0usize..4, m in 1u64..=12, pi in 0usize..4) {
        let k = fields()[i].clone();
        let pair = OrderPair::conductor(&k, m).unwrap();
        let p = BigInt::from(PRIMES[pi]);
        let e = local_unit_index(&pair, &p, CountMethod::Enumerate, DEFAULT_BUDGET);
        prop_assume!(e.is_ok());
        let e = e.unwrap();
        let s = local_unit_index(&pair, &p, CountMethod::Structural, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&e.units_o, &s.units_o);
        prop_assert_eq!(&e.index, &s.index);
        let (all, sub) = brute_force_units(&pair, PRIMES[pi], e.k);
        prop_assert_eq!(e.units_o, BigInt::from(all));
        prop_assert_eq!(e.units_lambda, BigInt::from(sub));
    }

    #[test]
    fn block_multiplicativity(m1 in 1u64..=9, m2 in 1u64..=9, pi in 0usize..4) {
        let a = OrderPair::conductor(&fields()[0], m1).unwrap();
        let b = OrderPair::conductor(&fields()[1], m2).unwrap();
        let p = BigInt::from(PRIMES[pi]);
        let idx = |x: &OrderPair| local_unit_index(x, &p, CountMethod::Auto, DEFAULT_BUDGET).unwrap().index;
        prop_assert_eq!(idx(&a.product(&b)), idx(&a) * idx(&b));
    }

    #[test]
    fn power_index_divides(m in 1u64..=20, pi in 0usize..4) {
        let pair = OrderPair::conductor(&fields()[0], m).unwrap();
        let p = BigInt::from(PRIMES[pi]);
        let local = local_unit_index(&pair, &p, CountMethod::Auto, DEFAULT_BUDGET).unwrap().index;
        let h2 = power_index(&pair, &p, 2, DEFAULT_BUDGET).unwrap();
        prop_assert!(!h2.is_zero());
        prop_assert!(local.is_multiple_of(&h2));
        prop_assert!(&local / &h2 <= BigInt::from(8));
    }
}
