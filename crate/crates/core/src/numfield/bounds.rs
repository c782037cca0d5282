//! Comparison bounds between `d_E` and the splitting-field discriminant `d_L`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::etale::{etale_discriminant, EtaleAlgebra};
use crate::error::{Error, Result};
use crate::ratlin::arith::factorial;

/// Largest degree whose exponent `c(n)` is materialized.
pub const MAX_C_BOUND_DEGREE: usize = 10;

/// `c(n) = n^(n + n!) · n!`.
pub fn c_bound(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("c_bound needs n ≥ 1".into()));
    }
    if n > MAX_C_BOUND_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: MAX_C_BOUND_DEGREE,
        });
    }
    let fact = BigInt::from(factorial(n as u64));
    let e = (&fact + n).to_usize().expect("small exponent");
    Ok(num_traits::pow(BigInt::from(n), e) * fact)
}

/// `floor(d_E^{1/c}) ≤ d_L ≤ d_E^c` with `c = c(dim E)`.
///
/// The upper bound is kept as a base and exponent; `exponent` is `None` when
/// `c` itself is too large to write down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingBounds {
    pub lower: BigInt,
    pub upper_base: BigInt,
    pub exponent: Option<BigInt>,
}

impl SplittingBounds {
    /// Exact value of the upper bound when it has at most `max_bits` bits.
    pub fn upper(&self, max_bits: u64) -> Option<BigInt> {
        let e = self.exponent.as_ref()?;
        if self.upper_base.is_one() {
            return Some(BigInt::one());
        }
        let bits = e.to_u64()?.checked_mul(self.upper_base.bits())?;
        (bits <= max_bits).then(|| num_traits::pow(self.upper_base.clone(), e.to_usize().unwrap()))
    }

    /// `lower ≤ d ≤ upper`, decided exactly.
    pub fn brackets(&self, d: &BigInt) -> bool {
        if d < &self.lower {
            return false;
        }
        if self.upper_base.is_one() {
            return d <= &BigInt::one();
        }
        match &self.exponent {
            None => true,
            Some(e) => {
                // base ≥ 2, so base^e ≥ 2^e > d whenever bits(d) ≤ e
                if BigInt::from(d.bits()) <= *e {
                    return true;
                }
                let e = e.to_usize().expect("checked above");
                d <= &num_traits::pow(self.upper_base.clone(), e)
            }
        }
    }
}

pub fn splitting_disc_bounds(e: &EtaleAlgebra) -> SplittingBounds {
    let d_e = etale_discriminant(e);
    let exponent = c_bound(e.dimension()).ok();
    let lower = match &exponent {
        Some(c) if BigInt::from(d_e.bits()) > *c => {
            d_e.nth_root(c.to_u32().expect("c below bit length"))
        }
        _ => BigInt::one(),
    };
    SplittingBounds {
        lower,
        upper_base: d_e,
        exponent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::etale::etale_from_factors;
    use crate::ratlin::poly::IntPolynomial;

    #[test]
    fn c_values() {
        assert_eq!(c_bound(1).unwrap(), BigInt::from(1));
        assert_eq!(c_bound(2).unwrap(), BigInt::from(32));
        assert_eq!(c_bound(3).unwrap(), BigInt::from(118098));
        assert!(c_bound(11).is_err());
    }

    #[test]
    fn bounds_examples() {
        let e = etale_from_factors(&[(IntPolynomial::from_i64(&[1, 0, 1]), 1)]).unwrap();
        let b = splitting_disc_bounds(&e);
        assert_eq!(b.lower, BigInt::one());
        assert_eq!(b.upper(1 << 20), Some(num_traits::pow(BigInt::from(4), 32)));
        assert!(b.brackets(&BigInt::from(4)));
        let e = etale_from_factors(&[(IntPolynomial::from_i64(&[0, 1]), 1)]).unwrap();
        let b = splitting_disc_bounds(&e);
        assert_eq!((b.lower.clone(), b.upper(64)), (BigInt::one(), Some(BigInt::one())));
        let e = etale_from_factors(&[(IntPolynomial::from_i64(&[-1, -1, 1]), 1)]).unwrap();
        assert_eq!(splitting_disc_bounds(&e).upper(1 << 20), Some(num_traits::pow(BigInt::from(5), 32)));
    }
}
