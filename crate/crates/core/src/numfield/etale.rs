//! Étale ℚ-algebras `L_1^{m_1} ⊕ … ⊕ L_f^{m_f}`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::field::NumberField;
use super::table::MultTable;
use crate::error::{Error, Result};
use crate::ratlin::matrix::{IntMatrix, Matrix};
use crate::ratlin::poly::IntPolynomial;

pub const MAX_ETALE_DIMENSION: usize = 16;

/// Position of one coordinate of the maximal-order basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub factor: usize,
    pub copy: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleAlgebra {
    factors: Vec<(NumberField, usize)>,
    labels: Vec<BasisLabel>,
    trace_gram: IntMatrix,
}

impl EtaleAlgebra {
    pub fn new(factors: Vec<(NumberField, usize)>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidInput("étale algebra needs positive multiplicities".into()));
        }
        let dim: usize = factors.iter().map(|(k, m)| k.degree() * m).sum();
        if dim > MAX_ETALE_DIMENSION {
            return Err(Error::DegreeTooLarge {
                degree: dim,
                cap: MAX_ETALE_DIMENSION,
            });
        }
        let mut labels = Vec::with_capacity(dim);
        let mut blocks = Vec::new();
        for (f, (k, m)) in factors.iter().enumerate() {
            for copy in 0..*m {
                labels.extend((0..k.degree()).map(|index| BasisLabel { factor: f, copy, index }));
                blocks.push(k.trace_gram());
            }
        }
        Ok(EtaleAlgebra {
            factors,
            labels,
            trace_gram: Matrix::block_diag(&blocks),
        })
    }

    pub fn factors(&self) -> &[(NumberField, usize)] {
        &self.factors
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    /// Labels of the `O_E` basis coordinates, block by block.
    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Trace form `Tr_{E/ℚ}` on the `O_E` basis; block-diagonal.
    pub fn trace_gram(&self) -> &IntMatrix {
        &self.trace_gram
    }

    /// Coordinates of `1 ∈ O_E`.
    pub fn one(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .flat_map(|(k, m)| std::iter::repeat_n(k.table().one().to_vec(), *m))
            .flatten()
            .collect()
    }

    /// Structure constants of `O_E` in its block basis.
    pub fn table(&self) -> MultTable {
        let n = self.dimension();
        let mut c = vec![BigInt::ZERO; n * n * n];
        let mut offset = 0;
        for (k, m) in &self.factors {
            let d = k.degree();
            for _ in 0..*m {
                for i in 0..d {
                    for j in 0..d {
                        for (l, x) in k.table().product(i, j).iter().enumerate() {
                            c[((offset + i) * n + offset + j) * n + offset + l] = x.clone();
                        }
                    }
                }
                offset += d;
            }
        }
        MultTable::new(n, c, self.one())
    }

    /// Start of each factor-copy block, in label order.
    pub fn block_offsets(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        for (f, (k, m)) in self.factors.iter().enumerate() {
            for copy in 0..*m {
                out.push((f, copy, offset));
                offset += k.degree();
            }
        }
        out
    }
}

pub fn etale_from_factors(factors: &[(IntPolynomial, usize)]) -> Result<EtaleAlgebra> {
    let fields = factors
        .iter()
        .map(|(f, m)| Ok((NumberField::new(f)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    EtaleAlgebra::new(fields)
}

/// `d_E = ∏ |d_{L_i}|^{m_i}`.
pub fn etale_discriminant(e: &EtaleAlgebra) -> BigInt {
    e.factors
        .iter()
        .fold(BigInt::one(), |acc, (k, m)| acc * num_traits::pow(k.abs_disc(), *m))
}

/// Sign of `det` of the trace form: `(-1)^{r_2}` summed over copies.
pub fn etale_disc_sign(e: &EtaleAlgebra) -> i8 {
    let neg = e
        .factors
        .iter()
        .filter(|(k, m)| k.field_disc().is_negative() && m % 2 == 1)
        .count();
    if neg % 2 == 0 {
        1
    } else {
        -1
    }
}
