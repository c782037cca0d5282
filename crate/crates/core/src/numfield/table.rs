//! Multiplication tables of free ℤ-algebras of finite rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::ratlin::arith::mul_mod;
use crate::ratlin::matrix::{rat_int, IntMatrix, RatMatrix};
use crate::ratlin::poly::{mul_mod_monic, IntPolynomial};

/// Structure constants `b_i·b_j = Σ_k c[i][j][k]·b_k` of a commutative ring
/// with a ℤ-basis, together with the coordinates of 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    n: usize,
    c: Vec<BigInt>,
    one: Vec<BigInt>,
}

impl MultTable {
    pub fn new(n: usize, c: Vec<BigInt>, one: Vec<BigInt>) -> Self {
        assert_eq!(c.len(), n * n * n);
        assert_eq!(one.len(), n);
        MultTable { n, c, one }
    }

    /// Table of the ℤ-span of `basis` (rows in power coordinates of ℚ[x]/(f)),
    /// or `None` if that span is not closed under multiplication or misses 1.
    pub fn from_power_basis(f: &IntPolynomial, basis: &RatMatrix) -> Option<Self> {
        let n = basis.rows();
        let inv = basis.inverse().ok()?;
        let to_int = |v: Vec<BigRational>| -> Option<Vec<BigInt>> {
            v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
        };
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = mul_mod_monic(basis.row(i), basis.row(j), f);
                c.extend(to_int(RatMatrix::vec_mul(&prod, &inv))?);
            }
        }
        let mut unit = vec![BigRational::zero(); n];
        unit[0] = rat_int(&BigInt::from(1));
        let one = to_int(RatMatrix::vec_mul(&unit, &inv))?;
        Some(MultTable { n, c, one })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> &[BigInt] {
        &self.one
    }

    /// Coordinates of `b_i·b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[BigInt] {
        let s = (i * self.n + j) * self.n;
        &self.c[s..s + self.n]
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    *o += &xy * c;
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ a·y`, column `j` holding the coordinates of `a·b_j`.
    pub fn mult_matrix(&self, a: &[BigInt]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for j in 0..self.n {
            let mut e = vec![BigInt::zero(); self.n];
            e[j] = BigInt::from(1);
            for (k, x) in self.mul(a, &e).into_iter().enumerate() {
                m[(k, j)] = x;
            }
        }
        m
    }

    pub fn trace(&self, a: &[BigInt]) -> BigInt {
        self.mult_matrix(a).trace()
    }

    /// Gram matrix of the trace form on the basis.
    pub fn trace_gram(&self) -> IntMatrix {
        let traces: Vec<BigInt> = (0..self.n)
            .map(|k| {
                let mut e = vec![BigInt::zero(); self.n];
                e[k] = BigInt::from(1);
                self.trace(&e)
            })
            .collect();
        let mut g = IntMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g[(i, j)] = self
                    .product(i, j)
                    .iter()
                    .zip(&traces)
                    .fold(BigInt::zero(), |acc, (c, t)| acc + c * t);
            }
        }
        g
    }

    /// Reduction modulo `m` (any modulus below 2^63).
    pub fn reduce(&self, m: u64) -> ModTable {
        let mb = BigInt::from(m);
        let red = |x: &BigInt| x.mod_floor(&mb).to_u64().expect("reduced");
        ModTable {
            n: self.n,
            m,
            c: self.c.iter().map(red).collect(),
            one: self.one.iter().map(red).collect(),
        }
    }
}

/// A multiplication table reduced modulo an integer `m`.
#[derive(Clone, Debug)]
pub struct ModTable {
    n: usize,
    pub m: u64,
    c: Vec<u64>,
    one: Vec<u64>,
}

impl ModTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut acc = vec![0u128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = mul_mod(x, y, self.m) as u128;
                let s = (i * n + j) * n;
                for (o, &c) in acc.iter_mut().zip(&self.c[s..s + n]) {
                    *o = (*o + xy * c as u128) % self.m as u128;
                }
            }
        }
        acc.into_iter().map(|x| x as u64).collect()
    }

    pub fn pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = self.one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Rows of the matrix of `y ↦ a·y`: row `j` holds the coordinates of `a·b_j`.
    pub fn mult_rows(&self, a: &[u64]) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|j| {
                let mut e = vec![0u64; self.n];
                e[j] = 1 % self.m;
                self.mul(a, &e)
            })
            .collect()
    }
}
