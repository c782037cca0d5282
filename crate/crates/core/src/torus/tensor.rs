//! The canonical quadratic tensor `η = (ν ⊗ ν) / D`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratlin::exterior::{content, normalize_sign, wedge_int, ExteriorVector};
use crate::ratlin::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTensor {
    /// Primitive integer vector in `∧^d ℤ^{n²}`, first nonzero coordinate positive.
    pub nu: ExteriorVector<BigInt>,
    /// The denominator `D = Disc(Λ)`.
    pub denom: BigInt,
}

impl CanonicalTensor {
    /// Tensor of a lattice with basis rows `basis` and discriminant `disc`.
    pub fn from_basis(basis: &IntMatrix, disc: &BigInt) -> Result<Self> {
        let nu = normalize_sign(&wedge_int(basis));
        let g = content(&nu);
        if !g.is_one() {
            return Err(Error::PrimitivityViolation(g.to_string()));
        }
        Ok(CanonicalTensor {
            nu,
            denom: disc.clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.nu.degree
    }

    pub fn ambient(&self) -> usize {
        self.nu.ambient
    }

    /// Least `n ≥ 1` with `n·η` integral, from the factored form.
    pub fn height(&self) -> BigInt {
        let g = content(&self.nu);
        &self.denom / self.denom.gcd(&(&g * &g))
    }

    /// Expanded coordinate `(i, j)`: `ν_i ν_j / D`.
    pub fn entry(&self, i: u128, j: u128) -> BigRational {
        BigRational::new(self.nu.get(i) * self.nu.get(j), self.denom.clone())
    }

    /// Height by expanding every nonzero coordinate of `η`; `None` if the
    /// support has more than `max_pairs` pairs.
    pub fn expanded_height(&self, max_pairs: usize) -> Option<BigInt> {
        let support = self.nu.nonzero();
        if support.len().saturating_mul(support.len()) > max_pairs {
            return None;
        }
        let mut h = BigInt::one();
        for (_, a) in &support {
            for (_, b) in &support {
                let q = BigRational::new(a * b, self.denom.clone());
                h = h.lcm(q.denom());
            }
        }
        Some(h)
    }
}

/// Height of `(w ⊗ w)/D` for a rational exterior vector `w`.
pub fn rational_tensor_height(w: &ExteriorVector<BigRational>, denom: &BigInt) -> BigInt {
    let entries = w.nonzero();
    if entries.is_empty() {
        return BigInt::one();
    }
    // w = c·u with u primitive integral, so the height is the denominator of c²/D
    let den = entries.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let num = entries.iter().fold(BigInt::zero(), |acc, (_, x)| {
        acc.gcd(&(x.numer() * (&den / x.denom())))
    });
    let c = BigRational::new(num, den);
    (&c * &c / BigRational::from_integer(denom.clone())).denom().clone()
}
