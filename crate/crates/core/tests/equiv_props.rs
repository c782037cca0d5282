use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use torusdisc::equiv::{
    combine_dichotomy_data, compose, dichotomy_combine, fit_domination, minimal_constant,
    DominationWitness, SampledFunction,
};

fn sampled(values: &[u64]) -> SampledFunction {
    SampledFunction::from_integers(values.iter().enumerate().map(|(i, v)| (i, BigInt::from(*v)))).unwrap()
}

fn growing() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=6, 4..=12).prop_map(|steps| {
        steps
            .into_iter()
            .scan(1u64, |acc, s| {
                *acc += s;
                Some(*acc)
            })
            .collect()
    })
}

/// `g·k_i^e` for a positive perturbation `k`.
fn power_of(g: &[u64], e: u32, k: &[u64]) -> Vec<u64> {
    g.iter().zip(k.iter().cycle()).map(|(x, y)| x.pow(e) * y).collect()
}

fn objective(w: &DominationWitness) -> f64 {
    w.exponent_f64() + w.constant_f64().ln()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fits_verify_and_are_locally_optimal(g in growing(), e in 1u32..=3, k in prop::collection::vec(1u64..=4, 1..4)) {
        let gs = sampled(&g);
        let fs = sampled(&power_of(&g, e, &k));
        let w = fit_domination(&fs, &gs).unwrap();
        w.verify(&fs, &gs).unwrap();
        let grid = BigRational::from_integer(1000.into());
        let scaled = &w.exponent * &grid;
        let below = (scaled.ceil() - BigRational::one()) / &grid;
        let above = (scaled.floor() + BigRational::one()) / &grid;
        for a in [below, above] {
            if a < BigRational::from_integer(0.into()) {
                continue;
            }
            let c = minimal_constant(&fs, &gs, &a);
            let other = DominationWitness::forward(a, c).unwrap();
            other.verify(&fs, &gs).unwrap();
            prop_assert!(objective(&other) >= objective(&w) - 1e-3);
        }
    }

    #[test]
    fn dichotomy_output_is_valid(g in growing(), e1 in 1u32..=2, e2 in 1u32..=2, k in prop::collection::vec(1u64..=3, 1..3)) {
        let f = sampled(&power_of(&g, e1, &k));
        let gs = sampled(&g);
        let h = sampled(&power_of(&g, e2, &[1]));
        let w1 = fit_domination(&h, &f.product(&gs).unwrap()).unwrap();
        let w2 = fit_domination(&gs, &f).unwrap();
        let w3 = dichotomy_combine(&f, &gs, &h, &w1, &w2).unwrap();
        let (a3, c3) = combine_dichotomy_data(&w1, &w2);
        prop_assert_eq!(&w3.exponent, &a3);
        prop_assert_eq!(&w3.constant, &c3);
        prop_assert_eq!(a3, &w2.exponent + &w1.exponent + &w1.exponent * &w2.exponent);
    }

    #[test]
    fn transitivity(g in growing(), e in 1u32..=2, k in prop::collection::vec(1u64..=3, 1..3)) {
        let h = sampled(&g);
        let gs = sampled(&power_of(&g, e, &k));
        let f = sampled(&power_of(&power_of(&g, e, &k), 2, &[1]));
        let wfg = fit_domination(&f, &gs).unwrap();
        let wgh = fit_domination(&gs, &h).unwrap();
        let w = compose(&wfg, &wgh);
        prop_assert_eq!(&w.exponent, &(&wfg.exponent * &wgh.exponent));
        w.verify(&f, &h).unwrap();
        prop_assert!(w.constant >= BigRational::one());
    }
}
