//! Number fields ℚ[x]/(f) with their rings of integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::table::MultTable;
use crate::error::{Error, Result};
use crate::ratlin::arith::factorize;
use crate::ratlin::factor::is_irreducible;
use crate::ratlin::lattice::hnf;
use crate::ratlin::matrix::{rat_int, IntMatrix, Matrix, RatMatrix};
use crate::ratlin::modp::left_kernel_mod_p;
use crate::ratlin::poly::{mul_mod_monic, reduce_mod_monic, IntPolynomial};

pub const MAX_FIELD_DEGREE: usize = 6;

/// A number field with an integral basis of its maximal order.
///
/// The basis is triangular in the power basis: `ω_0 = 1` and `ω_k` has degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    defining_poly: IntPolynomial,
    integral_basis: RatMatrix,
    basis_inverse: RatMatrix,
    field_disc: BigInt,
    table: MultTable,
}

impl NumberField {
    /// Ring of integers of ℚ[x]/(f) by Round 2.
    pub fn new(f: &IntPolynomial) -> Result<Self> {
        check_defining_poly(f)?;
        let basis = round2(f)?;
        Ok(Self::assemble(f, basis))
    }

    /// Accepts a caller-supplied integral basis (rows in power coordinates)
    /// after checking it is a ring containing `ℤ[x]` and is maximal.
    pub fn with_integral_basis(f: &IntPolynomial, basis: &RatMatrix) -> Result<Self> {
        check_defining_poly(f)?;
        let n = f.degree();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::BadIntegralBasis(format!("expected {n}×{n} basis")));
        }
        if basis.det().is_zero() {
            return Err(Error::BadIntegralBasis("basis is singular".into()));
        }
        let Some(_) = MultTable::from_power_basis(f, basis) else {
            return Err(Error::BadIntegralBasis(
                "span is not a ring containing 1".into(),
            ));
        };
        let inv = basis.inverse()?;
        for k in 0..n {
            let mut e = vec![BigRational::zero(); n];
            e[k] = BigRational::one();
            if !RatMatrix::vec_mul(&e, &inv).iter().all(|x| x.is_integer()) {
                return Err(Error::BadIntegralBasis(format!("x^{k} is not in the span")));
            }
        }
        let basis = triangular_basis(basis);
        for p in square_primes(f)? {
            if enlarge_at(f, &basis, p).is_some() {
                return Err(Error::BadIntegralBasis(format!("order is not maximal at {p}")));
            }
        }
        Ok(Self::assemble(f, basis))
    }

    fn assemble(f: &IntPolynomial, basis: RatMatrix) -> Self {
        let table = MultTable::from_power_basis(f, &basis).expect("order is a ring");
        let field_disc = table.trace_gram().det();
        NumberField {
            defining_poly: f.clone(),
            basis_inverse: basis.inverse().expect("basis is nonsingular"),
            integral_basis: basis,
            field_disc,
            table,
        }
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.defining_poly
    }

    pub fn degree(&self) -> usize {
        self.defining_poly.degree()
    }

    /// Rows are the integral basis in power coordinates.
    pub fn integral_basis(&self) -> &RatMatrix {
        &self.integral_basis
    }

    /// Signed discriminant of the maximal order.
    pub fn field_disc(&self) -> &BigInt {
        &self.field_disc
    }

    pub fn abs_disc(&self) -> BigInt {
        self.field_disc.abs()
    }

    /// Structure constants of the maximal order in the integral basis.
    pub fn table(&self) -> &MultTable {
        &self.table
    }

    /// `[O_K : ℤ[x]]`.
    pub fn equation_order_index(&self) -> BigInt {
        (BigRational::one() / self.integral_basis.det().abs()).to_integer()
    }

    /// Integral-basis coordinates of an element given in power coordinates.
    pub fn to_integral_coords(&self, v: &[BigRational]) -> Vec<BigRational> {
        RatMatrix::vec_mul(v, &self.basis_inverse)
    }

    pub fn to_power_coords(&self, v: &[BigRational]) -> Vec<BigRational> {
        RatMatrix::vec_mul(v, &self.integral_basis)
    }

    pub fn mul_power(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        mul_mod_monic(a, b, &self.defining_poly)
    }

    /// Trace form on the integral basis.
    pub fn trace_gram(&self) -> IntMatrix {
        self.table.trace_gram()
    }

    /// Trace form on the power basis `1, x, …, x^{n-1}`.
    pub fn power_trace_gram(&self) -> RatMatrix {
        power_trace_gram(&self.defining_poly)
    }
}

fn check_defining_poly(f: &IntPolynomial) -> Result<()> {
    if f.degree() == 0 {
        return Err(Error::InvalidInput("defining polynomial must have degree ≥ 1".into()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() > MAX_FIELD_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: f.degree(),
            cap: MAX_FIELD_DEGREE,
        });
    }
    if !is_irreducible(f)? {
        return Err(Error::NotIrreducible);
    }
    Ok(())
}

/// `Tr(x^{i+j})` for the power basis of ℚ[x]/(f).
pub fn power_trace_gram(f: &IntPolynomial) -> RatMatrix {
    let n = f.degree();
    let traces: Vec<BigRational> = (0..2 * n - 1)
        .map(|k| {
            (0..n).fold(BigRational::zero(), |acc, i| {
                let mut mono = vec![BigRational::zero(); k + i + 1];
                mono[k + i] = BigRational::one();
                acc + &reduce_mod_monic(&mono, f)[i]
            })
        })
        .collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = traces[i + j].clone();
        }
    }
    g
}

fn square_primes(f: &IntPolynomial) -> Result<Vec<u64>> {
    factorize(&f.discriminant())
        .into_iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| {
            p.to_u64()
                .filter(|&p| p < 1 << 62)
                .ok_or_else(|| Error::InvalidInput(format!("prime {p} too large for Round 2")))
        })
        .collect()
}

fn round2(f: &IntPolynomial) -> Result<RatMatrix> {
    let mut basis = RatMatrix::identity(f.degree());
    for p in square_primes(f)? {
        while let Some(larger) = enlarge_at(f, &basis, p) {
            basis = larger;
        }
    }
    Ok(basis)
}

/// One Round-2 step at `p`: the multiplier ring of the p-radical, if strictly larger.
fn enlarge_at(f: &IntPolynomial, basis: &RatMatrix, p: u64) -> Option<RatMatrix> {
    let n = basis.rows();
    let table = MultTable::from_power_basis(f, basis).expect("order is a ring");
    let red = table.reduce(p);
    let mut q: u128 = p as u128;
    while q < n as u128 {
        q *= p as u128;
    }
    let unit = |k: usize| {
        let mut e = vec![0u64; n];
        e[k] = 1;
        e
    };
    let frob: Vec<Vec<u64>> = (0..n).map(|i| red.pow(&unit(i), q)).collect();
    let radical = lift_with_multiples(&left_kernel_mod_p(&frob, p), n, p);
    let gamma = radical.to_rat();
    let gamma_inv = gamma.inverse().expect("radical has full rank");
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        let mut row = Vec::with_capacity(n * n);
        for j in 0..n {
            let prod: Vec<BigRational> = table
                .mul(&e, radical.row(j))
                .iter()
                .map(rat_int)
                .collect();
            for y in RatMatrix::vec_mul(&prod, &gamma_inv) {
                debug_assert!(y.is_integer());
                let r = y.to_integer() % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                row.push(r.to_u64().expect("reduced"));
            }
        }
        rows.push(row);
    }
    let kernel = left_kernel_mod_p(&rows, p);
    if kernel.is_empty() {
        return None;
    }
    let u = lift_with_multiples(&kernel, n, p);
    let scale = BigRational::new(BigInt::one(), BigInt::from(p));
    Some(triangular_basis(&u.to_rat().scale(&scale).mul(basis)))
}

/// HNF basis of the lattice spanned by the lifted vectors and `p·ℤ^n`.
fn lift_with_multiples(vectors: &[Vec<u64>], n: usize, p: u64) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::from(p);
        rows.push(e);
    }
    hnf(&Matrix::from_rows(&rows)).basis().clone()
}

/// Canonical basis of a full-rank ℤ-module in ℚ^n: triangular with pivots on
/// the highest power, ordered by degree.
fn triangular_basis(basis: &RatMatrix) -> RatMatrix {
    let n = basis.cols();
    let (d, ints) = basis.clear_denominators();
    let rev: Vec<usize> = (0..n).rev().collect();
    let h = hnf(&ints.select_cols(&rev));
    let rows: Vec<usize> = (0..h.rank()).rev().collect();
    let out = h.basis().select_cols(&rev).select_rows(&rows);
    out.map(|x| BigRational::new(x.clone(), d.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::matrix::rat;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(&IntPolynomial::from_i64(c)).unwrap()
    }

    #[test]
    fn quadratic_examples() {
        let k = field(&[1, 0, 1]);
        assert_eq!(k.field_disc(), &BigInt::from(-4));
        assert_eq!(k.integral_basis(), &RatMatrix::identity(2));
        let k = field(&[3, 0, 1]);
        assert_eq!(k.field_disc(), &BigInt::from(-3));
        let expect = RatMatrix::from_rows(&[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(k.integral_basis(), &expect);
        assert_eq!(field(&[-2, 0, 1]).field_disc(), &BigInt::from(8));
        assert_eq!(field(&[-5, 0, 1]).field_disc(), &BigInt::from(5));
    }

    #[test]
    fn cyclotomic_and_cubic() {
        assert_eq!(field(&[1, 1, 1, 1, 1]).field_disc(), &BigInt::from(125));
        // x^3 - x^2 - 2x - 8: Dedekind's example, index 2 at p = 2
        let k = field(&[-8, -2, -1, 1]);
        assert_eq!(k.field_disc(), &BigInt::from(-503));
        assert_eq!(k.equation_order_index(), BigInt::from(2));
        // ζ_8 and ζ_9
        assert_eq!(field(&[1, 0, 0, 0, 1]).field_disc(), &BigInt::from(256));
        assert_eq!(field(&[1, 0, 0, 1, 0, 0, 1]).field_disc(), &BigInt::from(-19683));
    }

    #[test]
    fn errors() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        assert_eq!(NumberField::new(&f), Err(Error::NotIrreducible));
        let f = IntPolynomial::from_i64(&[1, 0, 2]);
        assert_eq!(NumberField::new(&f), Err(Error::NotMonic));
        let f = IntPolynomial::from_i64(&[2, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(NumberField::new(&f), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn supplied_basis_is_checked() {
        let f = IntPolynomial::from_i64(&[3, 0, 1]);
        let good = RatMatrix::from_rows(&[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(NumberField::with_integral_basis(&f, &good).unwrap(), NumberField::new(&f).unwrap());
        let power = RatMatrix::identity(2);
        assert!(matches!(
            NumberField::with_integral_basis(&f, &power),
            Err(Error::BadIntegralBasis(_))
        ));
        let too_big = RatMatrix::from_rows(&[vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]]);
        assert!(matches!(
            NumberField::with_integral_basis(&f, &too_big),
            Err(Error::BadIntegralBasis(_))
        ));
    }
}
