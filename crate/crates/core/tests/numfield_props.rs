use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use torusdisc::numfield::{
    etale_discriminant, exact_splitting_disc, splitting_disc_bounds, EtaleAlgebra, NumberField,
};
use torusdisc::ratlin::{is_irreducible, IntMatrix, IntPolynomial};

/// Discriminant of `ℚ(√D)` from the squarefree part of `D`.
fn quadratic_field_disc(d: i64) -> i64 {
    let mut core = d.signum();
    let mut rest = d.abs();
    let mut q = 2;
    while q * q <= rest {
        while rest % (q * q) == 0 {
            rest /= q * q;
        }
        if rest % q == 0 {
            core *= q;
            rest /= q;
        }
        q += 1;
    }
    core *= rest;
    if core.rem_euclid(4) == 1 {
        core
    } else {
        4 * core
    }
}

fn is_square(n: i64) -> bool {
    n >= 0 && (n as f64).sqrt().round().powi(2) as i64 == n
}

fn quadratic() -> impl Strategy<Value = (i64, i64)> {
    (-9i64..=9, -30i64..=30).prop_filter("reducible", |(b, c)| !is_square(b * b - 4 * c))
}

fn cubic() -> impl Strategy<Value = IntPolynomial> {
    (-6i64..=6, -6i64..=6, -12i64..=12)
        .prop_map(|(a, b, c)| IntPolynomial::from_i64(&[c, b, a, 1]))
        .prop_filter("reducible", |f| is_irreducible(f).unwrap())
}

fn positive_definite(g: &IntMatrix) -> bool {
    (1..=g.rows()).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        g.select_rows(&idx).select_cols(&idx).det().is_positive()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn quadratic_disc_and_index((b, c) in quadratic()) {
        let f = IntPolynomial::from_i64(&[c, b, 1]);
        let k = NumberField::new(&f).unwrap();
        let expected = quadratic_field_disc(b * b - 4 * c);
        prop_assert_eq!(k.field_disc(), &BigInt::from(expected));
        prop_assert_eq!(k.abs_disc(), k.trace_gram().det().abs());
        let i = k.equation_order_index();
        prop_assert_eq!(&i * &i * k.abs_disc(), f.discriminant().abs());
    }

    #[test]
    fn cubic_disc_and_index(f in cubic()) {
        let k = NumberField::new(&f).unwrap();
        prop_assert_eq!(k.abs_disc(), k.trace_gram().det().abs());
        let i = k.equation_order_index();
        prop_assert_eq!(&i * &i * k.abs_disc(), f.discriminant().abs());
        prop_assert!(k.field_disc().signum() == f.discriminant().signum());
    }

    #[test]
    fn etale_disc_is_block_product((b1, c1) in quadratic(), (b2, c2) in quadratic(), m in 1usize..=2) {
        let k1 = NumberField::new(&IntPolynomial::from_i64(&[c1, b1, 1])).unwrap();
        let k2 = NumberField::new(&IntPolynomial::from_i64(&[c2, b2, 1])).unwrap();
        let e = EtaleAlgebra::new(vec![(k1.clone(), m), (k2.clone(), 1)]).unwrap();
        let d = etale_discriminant(&e);
        prop_assert_eq!(&d, &e.trace_gram().det().abs());
        prop_assert_eq!(d, k1.abs_disc().pow(m as u32) * k2.abs_disc());
    }

    #[test]
    fn bounds_bracket_exact(f in prop_oneof![
        quadratic().prop_map(|(b, c)| IntPolynomial::from_i64(&[c, b, 1])),
        cubic(),
    ]) {
        let k = NumberField::new(&f).unwrap();
        if let Some(d) = exact_splitting_disc(&k) {
            let e = EtaleAlgebra::new(vec![(k, 1)]).unwrap();
            prop_assert!(splitting_disc_bounds(&e).brackets(&d));
        }
    }
}

#[test]
fn trace_form_signature() {
    let real = NumberField::new(&IntPolynomial::from_i64(&[-2, 0, 1])).unwrap();
    let imag = NumberField::new(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap();
    assert!(positive_definite(&real.trace_gram()));
    assert!(!positive_definite(&imag.trace_gram()));
    let cubic_real = NumberField::new(&IntPolynomial::from_i64(&[1, -3, 0, 1])).unwrap();
    assert!(positive_definite(&cubic_real.trace_gram()));
}
