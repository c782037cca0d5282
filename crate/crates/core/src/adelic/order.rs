//! A finite-index suborder `Λ ⊆ O` described in the coordinates of `O`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numfield::{MultTable, NumberField};
use crate::ratlin::arith::valuation;
use crate::ratlin::lattice::{hnf, snf_diagonal, IntegerLattice};
use crate::ratlin::matrix::{IntMatrix, Matrix};
use crate::torus::EmbeddedTorus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPair {
    table: MultTable,
    sub: IntegerLattice,
}

impl OrderPair {
    /// `table` describes `O`; the rows of `generators` span `Λ` in `O` coordinates.
    pub fn new(table: MultTable, generators: &IntMatrix) -> Result<Self> {
        let n = table.dim();
        if generators.cols() != n {
            return Err(Error::DimensionMismatch("suborder generators vs rank of O".into()));
        }
        let sub = hnf(generators);
        if sub.rank() != n {
            return Err(Error::RankMismatch(sub.rank(), n));
        }
        if !sub.contains(table.one()) {
            return Err(Error::InvalidInput("suborder does not contain 1".into()));
        }
        let basis = sub.basis().to_rows();
        for a in &basis {
            for b in &basis {
                if !sub.contains(&table.mul(a, b)) {
                    return Err(Error::InvalidInput("suborder is not closed under multiplication".into()));
                }
            }
        }
        Ok(OrderPair { table, sub })
    }

    /// `O` paired with itself.
    pub fn maximal(table: MultTable) -> Self {
        let n = table.dim();
        OrderPair {
            table,
            sub: IntegerLattice::standard(n),
        }
    }

    /// `ℤ + m·O_K` inside `O_K`.
    pub fn conductor(k: &NumberField, m: u64) -> Result<Self> {
        let table = k.table().clone();
        let n = table.dim();
        let mut rows = vec![table.one().to_vec()];
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(m);
            rows.push(e);
        }
        Self::new(table, &Matrix::from_rows(&rows))
    }

    /// `Λ ⊆ O_E` of an embedded torus.
    pub fn from_torus(t: &EmbeddedTorus) -> Self {
        OrderPair {
            table: t.etale().table(),
            sub: hnf(t.to_maximal()),
        }
    }

    /// Componentwise pair on `O_1 × O_2`.
    pub fn product(&self, other: &OrderPair) -> OrderPair {
        let (n1, n2) = (self.rank(), other.rank());
        let n = n1 + n2;
        let mut c = vec![BigInt::zero(); n * n * n];
        for (t, off, m) in [(&self.table, 0, n1), (&other.table, n1, n2)] {
            for i in 0..m {
                for j in 0..m {
                    for (k, x) in t.product(i, j).iter().enumerate() {
                        c[((off + i) * n + off + j) * n + off + k] = x.clone();
                    }
                }
            }
        }
        let one: Vec<BigInt> = self.table.one().iter().chain(other.table.one()).cloned().collect();
        let basis = Matrix::block_diag(&[self.sub.basis().clone(), other.sub.basis().clone()]);
        OrderPair {
            table: MultTable::new(n, c, one),
            sub: hnf(&basis),
        }
    }

    pub fn rank(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &MultTable {
        &self.table
    }

    /// `Λ` in `O` coordinates, HNF basis.
    pub fn sub(&self) -> &IntegerLattice {
        &self.sub
    }

    /// `[O : Λ]`.
    pub fn index(&self) -> BigInt {
        self.sub.basis().det().abs()
    }

    /// Least `k ≥ 0` with `p^k·O ⊆ Λ`.
    pub fn conductor_exponent(&self, p: &BigInt) -> u32 {
        snf_diagonal(self.sub.basis())
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| valuation(d, p))
            .max()
            .unwrap_or(0)
    }

    /// Structure constants of `Λ` in its own HNF basis.
    pub fn sub_table(&self) -> MultTable {
        let basis = self.sub.basis().to_rows();
        let n = basis.len();
        let mut c = Vec::with_capacity(n * n * n);
        for a in &basis {
            for b in &basis {
                c.extend(self.sub.coordinates(&self.table.mul(a, b)).expect("Λ is a ring"));
            }
        }
        let one = self.sub.coordinates(self.table.one()).expect("1 ∈ Λ");
        MultTable::new(n, c, one)
    }

    /// Diagonal of the HNF basis of `Λ`.
    pub fn hnf_diagonal(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.sub.basis()[(i, i)].clone()).collect()
    }
}

pub(crate) fn to_u64(p: &BigInt) -> Result<u64> {
    p.to_u64()
        .filter(|&p| p < 1 << 62)
        .ok_or_else(|| Error::InvalidInput(format!("prime {p} out of range")))
}
