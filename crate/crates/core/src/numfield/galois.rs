//! Galois groups of irreducible polynomials of degree at most 4.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::NumberField;
use crate::error::{Error, Result};
use crate::ratlin::arith::{is_rational_square, is_square};
use crate::ratlin::factor::factor_over_q;
use crate::ratlin::poly::IntPolynomial;

pub const MAX_EXACT_GALOIS_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallGaloisGroup {
    Trivial,
    C2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl SmallGaloisGroup {
    pub fn order(self) -> usize {
        use SmallGaloisGroup::*;
        match self {
            Trivial => 1,
            C2 => 2,
            C3 => 3,
            S3 => 6,
            C4 | V4 => 4,
            D4 => 8,
            A4 => 12,
            S4 => 24,
        }
    }

    pub fn degree(self) -> usize {
        use SmallGaloisGroup::*;
        match self {
            Trivial => 1,
            C2 => 2,
            C3 | S3 => 3,
            _ => 4,
        }
    }

    /// The stem field is its own splitting field.
    pub fn is_regular(self) -> bool {
        self.order() == self.degree()
    }
}

impl fmt::Display for SmallGaloisGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Galois group of a monic irreducible polynomial of degree ≤ 4.
pub fn small_galois_group(f: &IntPolynomial) -> Result<SmallGaloisGroup> {
    use SmallGaloisGroup::*;
    let n = f.degree();
    if n > MAX_EXACT_GALOIS_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: MAX_EXACT_GALOIS_DEGREE,
        });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let disc = f.discriminant();
    Ok(match n {
        1 => Trivial,
        2 => C2,
        3 => {
            if is_square(&disc) {
                C3
            } else {
                S3
            }
        }
        _ => {
            let c = f.coeffs();
            let (d, cc, b, a) = (&c[0], &c[1], &c[2], &c[3]);
            let resolvent = IntPolynomial::new(vec![
                -(a * a * d - BigInt::from(4) * b * d + cc * cc),
                a * cc - BigInt::from(4) * d,
                -b.clone(),
                BigInt::from(1),
            ]);
            let roots = rational_roots(&resolvent)?;
            match roots.len() {
                3 => V4,
                1 => {
                    let r = &roots[0];
                    let q1 = r * r - BigInt::from(4) * d;
                    let q2 = a * a - BigInt::from(4) * (b - r);
                    if splits_over(&q1, &disc) && splits_over(&q2, &disc) {
                        C4
                    } else {
                        D4
                    }
                }
                _ => {
                    if is_square(&disc) {
                        A4
                    } else {
                        S4
                    }
                }
            }
        }
    })
}

/// A quadratic with discriminant `delta` splits over ℚ(√disc).
fn splits_over(delta: &BigInt, disc: &BigInt) -> bool {
    let d = BigRational::from_integer(delta.clone());
    delta.is_zero()
        || is_rational_square(&d)
        || is_rational_square(&(d * BigRational::from_integer(disc.clone())))
}

fn rational_roots(f: &IntPolynomial) -> Result<Vec<BigInt>> {
    Ok(factor_over_q(f)?
        .into_iter()
        .filter(|(g, _)| g.degree() == 1)
        .map(|(g, _)| -(&g.coeffs()[0] / &g.coeffs()[1]))
        .collect())
}

/// `|d_K|` when `K` is Galois over ℚ (detected up to degree 4).
pub fn exact_splitting_disc(k: &NumberField) -> Option<BigInt> {
    let g = small_galois_group(k.defining_poly()).ok()?;
    g.is_regular().then(|| k.abs_disc())
}

#[cfg(test)]
mod tests {
    use super::*;
    use SmallGaloisGroup::*;

    fn group(c: &[i64]) -> SmallGaloisGroup {
        small_galois_group(&IntPolynomial::from_i64(c)).unwrap()
    }

    #[test]
    fn known_groups() {
        assert_eq!(group(&[1, 0, 1]), C2);
        assert_eq!(group(&[-1, -3, 0, 1]), C3);
        assert_eq!(group(&[-2, 0, 0, 1]), S3);
        assert_eq!(group(&[1, 0, 0, 0, 1]), V4);
        assert_eq!(group(&[1, 1, 1, 1, 1]), C4);
        assert_eq!(group(&[-2, 0, 0, 0, 1]), D4);
        assert_eq!(group(&[12, 8, 0, 0, 1]), A4);
        assert_eq!(group(&[-1, -1, 0, 0, 1]), S4);
        // x^4 - 4x^2 + 2 = min poly of sqrt(2 + sqrt 2), cyclic
        assert_eq!(group(&[2, 0, -4, 0, 1]), C4);
    }

    #[test]
    fn splitting_discs() {
        let k = NumberField::new(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(exact_splitting_disc(&k), Some(BigInt::from(4)));
        let k = NumberField::new(&IntPolynomial::from_i64(&[-1, -3, 0, 1])).unwrap();
        assert_eq!(exact_splitting_disc(&k), Some(BigInt::from(81)));
        let k = NumberField::new(&IntPolynomial::from_i64(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(exact_splitting_disc(&k), None);
    }
}
