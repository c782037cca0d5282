//! Shared inputs for the benchmarks.

use num_bigint::BigInt;
use torusdisc::adelic::OrderPair;
use torusdisc::equiv::SampledFunction;
use torusdisc::numfield::NumberField;
use torusdisc::ratlin::IntPolynomial;

pub fn gaussian() -> NumberField {
    NumberField::new(&IntPolynomial::from_i64(&[1, 0, 1])).expect("x^2 + 1 is irreducible")
}

pub fn gaussian_order(m: u64) -> OrderPair {
    OrderPair::conductor(&gaussian(), m).expect("valid conductor")
}

/// `(i², i)` for `2 ≤ i ≤ n`.
pub fn square_samples(n: i64) -> (SampledFunction, SampledFunction) {
    let f = SampledFunction::from_integers((2..=n).map(|i| (i, BigInt::from(i * i)))).expect("values ≥ 1");
    let g = SampledFunction::from_integers((2..=n).map(|i| (i, BigInt::from(i)))).expect("values ≥ 1");
    (f, g)
}
