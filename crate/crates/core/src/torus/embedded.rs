//! Tori embedded in `GL(n, ℚ)` through their matrix algebras.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closure::{algebra_closure, lattice_matrices, matrix_order};
use super::tensor::{rational_tensor_height, CanonicalTensor};
use crate::error::{Error, Result};
use crate::numfield::{etale_discriminant, EtaleAlgebra, MultTable, NumberField};
use crate::ratlin::exterior::{wedge, ExteriorVector};
use crate::ratlin::factor::factor_over_q;
use crate::ratlin::lattice::IntegerLattice;
use crate::ratlin::matrix::{flatten, rat_int, IntMatrix, Matrix, RatMatrix};
use crate::ratlin::poly::{reduce_mod_monic, IntPolynomial};

/// How a number field acts on `ℚ^{deg}` in [`EmbeddedTorus::regular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegularBasis {
    /// Multiplication matrices in the integral basis; `Λ = O_E`.
    #[default]
    Integral,
    /// Companion matrices in the power basis; `Λ = ℤ[x]/(f)`.
    Power,
}

#[derive(Clone, Debug)]
pub struct EmbeddedTorus {
    ambient_n: usize,
    generators: Vec<RatMatrix>,
    algebra_basis: Vec<RatMatrix>,
    order_lattice: IntegerLattice,
    order_table: MultTable,
    etale: EtaleAlgebra,
    to_maximal: IntMatrix,
    order_index: BigInt,
    disc_lambda: BigInt,
    tensor: CanonicalTensor,
}

impl EmbeddedTorus {
    /// Torus whose algebra `E` is generated by the commuting semisimple `gens`.
    pub fn new(gens: Vec<RatMatrix>) -> Result<Self> {
        let algebra_basis = algebra_closure(&gens)?;
        let n = gens[0].rows();
        let order_lattice = matrix_order(&algebra_basis, n);
        let order_table = order_table(&order_lattice, n);
        let disc_lambda = order_table.trace_gram().det().abs();
        let (etale, to_maximal) = decompose(&order_table)?;
        let order_index = to_maximal.det().abs();
        let tensor = CanonicalTensor::from_basis(order_lattice.basis(), &disc_lambda)?;
        Ok(EmbeddedTorus {
            ambient_n: n,
            generators: gens,
            algebra_basis,
            order_lattice,
            order_table,
            etale,
            to_maximal,
            order_index,
            disc_lambda,
            tensor,
        })
    }

    /// Block-diagonal regular representation of `⊕ L_i^{m_i}`.
    pub fn regular(factors: &[(NumberField, usize)], basis: RegularBasis) -> Result<Self> {
        let mut blocks: Vec<Vec<RatMatrix>> = Vec::new();
        for (k, m) in factors {
            let mats = field_action(k, basis);
            for _ in 0..*m {
                blocks.push(mats.clone());
            }
        }
        Self::new(block_generators(&blocks))
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[RatMatrix] {
        &self.generators
    }

    pub fn algebra_basis(&self) -> &[RatMatrix] {
        &self.algebra_basis
    }

    pub fn dimension(&self) -> usize {
        self.algebra_basis.len()
    }

    pub fn order_lattice(&self) -> &IntegerLattice {
        &self.order_lattice
    }

    /// Basis of `Λ` as integer matrices.
    pub fn order_basis(&self) -> Vec<RatMatrix> {
        lattice_matrices(&self.order_lattice, self.ambient_n)
    }

    /// Structure constants of `Λ` in its HNF basis.
    pub fn order_table(&self) -> &MultTable {
        &self.order_table
    }

    pub fn etale(&self) -> &EtaleAlgebra {
        &self.etale
    }

    /// Rows: the `Λ` basis in `O_E` coordinates.
    pub fn to_maximal(&self) -> &IntMatrix {
        &self.to_maximal
    }

    /// `[O_E : Λ]`.
    pub fn order_index(&self) -> &BigInt {
        &self.order_index
    }

    pub fn etale_disc(&self) -> BigInt {
        etale_discriminant(&self.etale)
    }

    /// `Disc(Λ) = |det Tr_{E/ℚ}|` on a basis of `Λ`.
    pub fn disc(&self) -> &BigInt {
        &self.disc_lambda
    }

    pub fn tensor(&self) -> &CanonicalTensor {
        &self.tensor
    }

    /// The discriminant-height `δ`.
    pub fn delta(&self) -> BigInt {
        self.tensor.height()
    }

    /// The torus with generators `g X g⁻¹`.
    pub fn conjugate(&self, g: &RatMatrix) -> Result<Self> {
        let ginv = g.inverse()?;
        if g.rows() != self.ambient_n {
            return Err(Error::DimensionMismatch("conjugator size".into()));
        }
        Self::new(self.generators.iter().map(|x| g.mul(x).mul(&ginv)).collect())
    }

    /// `∧^d Ad_g` applied to `ν`, as the wedge of the conjugated basis of `Λ`.
    pub fn transported_wedge(&self, g: &RatMatrix) -> Result<ExteriorVector<BigRational>> {
        let ginv = g.inverse()?;
        let rows: Vec<Vec<BigRational>> = self
            .order_basis()
            .iter()
            .map(|x| flatten(&g.mul(x).mul(&ginv)))
            .collect();
        Ok(wedge(&Matrix::from_rows(&rows)))
    }

    /// Height of `g·η`, computed from the transported tensor alone.
    pub fn transported_height(&self, g: &RatMatrix) -> Result<BigInt> {
        Ok(rational_tensor_height(&self.transported_wedge(g)?, &self.disc_lambda))
    }

    pub fn height_report(&self) -> HeightReport {
        let d_e = self.etale_disc();
        HeightReport {
            disc: self.disc_lambda.clone(),
            delta: self.delta(),
            etale_disc: d_e.clone(),
            order_index: self.order_index.clone(),
            equal: self.disc_lambda == self.delta(),
            product_formula: self.disc_lambda == &d_e * &self.order_index * &self.order_index,
        }
    }
}

/// `Disc(Λ)` against `δ`, with the `d_E·[O_E:Λ]²` cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    pub disc: BigInt,
    pub delta: BigInt,
    pub etale_disc: BigInt,
    pub order_index: BigInt,
    pub equal: bool,
    pub product_formula: bool,
}

impl HeightReport {
    pub fn passed(&self) -> bool {
        self.equal && self.product_formula
    }
}

pub fn verify_height_equals_disc_sample(t: &EmbeddedTorus) -> HeightReport {
    t.height_report()
}

fn order_table(l: &IntegerLattice, n: usize) -> MultTable {
    let mats = lattice_matrices(l, n);
    let d = mats.len();
    let coords = |m: &RatMatrix| -> Vec<BigInt> {
        let v: Vec<BigInt> = flatten(m).iter().map(|x| x.to_integer()).collect();
        l.coordinates(&v).expect("Λ is closed under multiplication")
    };
    let mut c = Vec::with_capacity(d * d * d);
    for a in &mats {
        for b in &mats {
            c.extend(coords(&a.mul(b)));
        }
    }
    let one = coords(&RatMatrix::identity(n));
    MultTable::new(d, c, one)
}

fn powers(table: &MultTable, theta: &[BigInt], count: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![table.one().to_vec()];
    while out.len() < count {
        let next = table.mul(out.last().expect("nonempty"), theta);
        out.push(next);
    }
    out
}

fn to_rat_rows(rows: &[Vec<BigInt>]) -> RatMatrix {
    Matrix::from_rows(&rows.iter().map(|r| r.iter().map(rat_int).collect()).collect::<Vec<_>>())
}

/// Element of `Λ` generating `E` as a ℚ-algebra: a basis vector if one
/// works, else a seeded random small combination.
fn primitive_element(table: &MultTable) -> Vec<BigInt> {
    let d = table.dim();
    let generates = |theta: &[BigInt]| to_rat_rows(&powers(table, theta, d)).rank() == d;
    for i in 0..d {
        let mut e = vec![BigInt::zero(); d];
        e[i] = BigInt::one();
        if generates(&e) {
            return e;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e7a);
    for attempt in 0usize.. {
        let bound = 1 + (attempt / 8) as i64;
        let theta: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect();
        if generates(&theta) {
            return theta;
        }
    }
    unreachable!()
}

/// Splits `E = ℚ[θ]` into fields and maps `Λ` into `O_E = ⊕ O_{L_j}`.
fn decompose(table: &MultTable) -> Result<(EtaleAlgebra, IntMatrix)> {
    let d = table.dim();
    let theta = primitive_element(table);
    let pw = powers(table, &theta, d + 1);
    let p = to_rat_rows(&pw[..d]);
    let top: Vec<BigRational> = pw[d].iter().map(rat_int).collect();
    let c = p.solve_left(&top).expect("powers span E");
    let mut coeffs: Vec<BigInt> = c.iter().map(|x| -x.to_integer()).collect();
    coeffs.push(BigInt::one());
    let min_poly = IntPolynomial::new(coeffs);
    let factors = factor_over_q(&min_poly)?;
    let fields: Vec<NumberField> = factors
        .iter()
        .map(|(f, _)| NumberField::new(f))
        .collect::<Result<_>>()?;
    // row i of p⁻¹ expresses basis vector i as a polynomial in θ
    let as_poly = p.inverse()?;
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for k in &fields {
            let power = reduce_mod_monic(as_poly.row(i), k.defining_poly());
            for x in k.to_integral_coords(&power) {
                debug_assert!(x.is_integer(), "Λ lies in the maximal order");
                row.push(x.to_integer());
            }
        }
        rows.push(row);
    }
    let etale = EtaleAlgebra::new(fields.into_iter().map(|k| (k, 1)).collect())?;
    Ok((etale, Matrix::from_rows(&rows)))
}

/// Matrices of multiplication by the basis of `k` acting on `ℚ^{deg}`.
fn field_action(k: &NumberField, basis: RegularBasis) -> Vec<RatMatrix> {
    let n = k.degree();
    match basis {
        RegularBasis::Integral => (1..n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); n];
                e[i] = BigInt::one();
                k.table().mult_matrix(&e).to_rat()
            })
            .collect(),
        RegularBasis::Power => {
            if n == 1 {
                return Vec::new();
            }
            // column j holds x·x^j
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                let mut mono = vec![BigRational::zero(); j + 2];
                mono[j + 1] = BigRational::one();
                for (i, x) in reduce_mod_monic(&mono, k.defining_poly()).into_iter().enumerate() {
                    m[(i, j)] = x;
                }
            }
            vec![m]
        }
    }
}

/// Block-diagonal generators: each block's own generators with identity
/// elsewhere, plus a block marker `2·I` when there are several blocks.
fn block_generators(blocks: &[Vec<RatMatrix>]) -> Vec<RatMatrix> {
    let sizes: Vec<usize> = blocks
        .iter()
        .map(|b| b.first().map_or(1, |m| m.rows()))
        .collect();
    let embed = |b: usize, m: &RatMatrix| {
        let parts: Vec<RatMatrix> = sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| if i == b { m.clone() } else { RatMatrix::identity(s) })
            .collect();
        Matrix::block_diag(&parts)
    };
    let mut gens = Vec::new();
    for (b, mats) in blocks.iter().enumerate() {
        for m in mats {
            gens.push(embed(b, m));
        }
        if blocks.len() > 1 {
            let two = RatMatrix::identity(sizes[b]).scale(&BigRational::from_integer(2.into()));
            gens.push(embed(b, &two));
        }
    }
    if gens.is_empty() {
        gens.push(RatMatrix::identity(sizes.iter().sum()));
    }
    gens
}

/// `diag(1, m, …, m)`: conjugating a regular block by it yields `ℤ + m·O`.
pub fn conductor_conjugator(n: usize, m: i64) -> RatMatrix {
    let mut entries = vec![BigRational::from_integer(m.into()); n];
    entries[0] = BigRational::one();
    RatMatrix::diagonal(&entries)
}
