//! Polynomial domination and equivalence of numerical functions on finite
//! samples: fitted witnesses `f ≤ c·g^a`, symbolic combination rules and
//! exact verification.

pub mod fit;
pub mod sampled;
pub mod witness;

pub use fit::{
    check_equivalence, check_equivalence_with, fit_domination, max_product_bracket,
    minimal_constant, Domination, EquivCaps, EquivReport, FailureCertificate, ProductBracket,
};
pub use sampled::SampledFunction;
pub use witness::{
    bound_holds, combine_dichotomy_data, compose, dichotomy_combine, Direction, DominationWitness,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int_fn(range: impl IntoIterator<Item = i64>, f: impl Fn(i64) -> BigInt) -> SampledFunction {
        SampledFunction::from_integers(range.into_iter().map(|i| (i, f(i)))).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fits_square() {
        let f = int_fn(2..=100, |i| BigInt::from(i * i));
        let g = int_fn(2..=100, BigInt::from);
        let w = fit_domination(&f, &g).unwrap();
        assert_eq!((w.exponent.clone(), w.constant.clone()), (r(2, 1), r(1, 1)));
        let w = fit_domination(&int_fn(2..=100, |i| BigInt::from(4 * i * i)), &g).unwrap();
        assert_eq!((w.exponent, w.constant), (r(2, 1), r(4, 1)));
    }

    #[test]
    fn self_domination() {
        let g = int_fn(2..=60, |i| BigInt::from(i * i + 7));
        let w = fit_domination(&g, &g).unwrap();
        assert_eq!((w.exponent, w.constant), (r(1, 1), r(1, 1)));
        let rep = check_equivalence(&g, &g).unwrap();
        assert!(rep.equivalent());
    }

    #[test]
    fn fractional_exponent_verifies() {
        // f = i^3, g = i^2: a = 3/2
        let f = int_fn(2..=40, |i| BigInt::from(i * i * i));
        let g = int_fn(2..=40, |i| BigInt::from(i * i));
        let w = fit_domination(&f, &g).unwrap();
        assert_eq!(w.exponent, r(3, 2));
        assert_eq!(w.constant, r(1, 1));
        assert_eq!(
            DominationWitness::forward(r(1499, 1000), r(1, 1)).unwrap().verify(&f, &g),
            Err(Error::InvalidWitness(0))
        );
    }

    #[test]
    fn all_ones() {
        let f = int_fn(1..=5, BigInt::from);
        let g = int_fn(1..=5, |_| BigInt::from(1));
        assert_eq!(fit_domination(&f, &g), Err(Error::AllOnes));
        let w = fit_domination(&g, &g).unwrap();
        assert_eq!(w.exponent, r(0, 1));
    }

    #[test]
    fn unit_g_samples_bound_constant() {
        let f = int_fn(1..=30, |i| BigInt::from(if i == 1 { 3 } else { i * i }));
        let g = int_fn(1..=30, BigInt::from);
        let w = fit_domination(&f, &g).unwrap();
        assert!(w.constant >= r(3, 1));
        w.verify(&f, &g).unwrap();
    }

    #[test]
    fn exponential_fails() {
        let f = int_fn(1..=60, |i| BigInt::from(2).pow(i as u32));
        let g = int_fn(1..=60, BigInt::from);
        let rep = check_equivalence(&f, &g).unwrap();
        match &rep.forward {
            Domination::Failure(c) => assert_eq!(c.index, 59),
            other => panic!("expected failure, got {other:?}"),
        }
        assert!(rep.backward.witness().is_some());
        assert!(!rep.equivalent());
    }

    #[test]
    fn capped_search_prefers_small_constant() {
        // f = 100·i: unconstrained optimum has c > 16, capped search trades for a larger a
        let f = int_fn(2..=200, |i| BigInt::from(100 * i));
        let g = int_fn(2..=200, BigInt::from);
        let rep = check_equivalence(&f, &g).unwrap();
        let w = rep.forward.witness().unwrap();
        assert!(w.constant <= r(16, 1));
        w.verify(&f, &g).unwrap();
    }

    #[test]
    fn dichotomy_examples() {
        let one = r(1, 1);
        let w = |a: BigRational, c: BigRational| DominationWitness::forward(a, c).unwrap();
        let (a3, c3) = combine_dichotomy_data(&w(one.clone(), one.clone()), &w(one.clone(), one.clone()));
        assert_eq!((a3, c3), (r(3, 1), one.clone()));
        let (a3, c3) = combine_dichotomy_data(&w(r(0, 1), r(5, 1)), &w(r(3, 2), r(7, 1)));
        assert_eq!((a3, c3), (r(3, 2), r(35, 1)));
        let (a3, _) = combine_dichotomy_data(&w(r(2, 1), one.clone()), &w(one.clone(), one));
        assert_eq!(a3, r(5, 1));
    }

    #[test]
    fn dichotomy_on_samples() {
        let f = int_fn(2..=30, |i| BigInt::from(i * i));
        let g = int_fn(2..=30, BigInt::from);
        let h = int_fn(2..=30, |i| BigInt::from(i * i * i));
        let w1 = fit_domination(&h, &f.product(&g).unwrap()).unwrap();
        let w2 = fit_domination(&g, &f).unwrap();
        let w3 = dichotomy_combine(&f, &g, &h, &w1, &w2).unwrap();
        assert_eq!(w3, DominationWitness::forward(
            &w2.exponent + &w1.exponent + &w1.exponent * &w2.exponent,
            w3.constant.clone()
        ).unwrap());
        let bad = DominationWitness::forward(r(0, 1), r(1, 1)).unwrap();
        assert!(matches!(dichotomy_combine(&f, &g, &h, &bad, &w2), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn brackets() {
        let f = int_fn(1..=20, |i| BigInt::from(i + 3));
        let g = int_fn(1..=20, |i| BigInt::from(40 - i));
        max_product_bracket(&f, &g).unwrap();
        let one = int_fn(1..=20, |_| BigInt::from(1));
        let b = max_product_bracket(&one, &g).unwrap();
        assert_eq!(b.max, g);
        assert_eq!(b.product, g);
        let b = max_product_bracket(&f, &f).unwrap();
        assert_eq!(b.max, f);
    }

    #[test]
    fn transitivity() {
        let f = int_fn(2..=30, |i| BigInt::from(i).pow(4));
        let g = int_fn(2..=30, |i| BigInt::from(i * i));
        let h = int_fn(2..=30, BigInt::from);
        let w = compose(&fit_domination(&f, &g).unwrap(), &fit_domination(&g, &h).unwrap());
        assert_eq!(w.exponent, r(4, 1));
        w.verify(&f, &h).unwrap();
    }
}
