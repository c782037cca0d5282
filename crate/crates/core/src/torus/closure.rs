//! Unital algebras generated by commuting rational matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratlin::lattice::{integral_points_of_span, IntegerLattice};
use crate::ratlin::matrix::{flatten, unflatten, Matrix, RatMatrix};
use crate::ratlin::poly::RatPoly;

fn check_generators(gens: &[RatMatrix]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidInput("at least one generator is required".into()));
    };
    let n = first.rows();
    if n == 0 {
        return Err(Error::InvalidInput("generators must be nonempty matrices".into()));
    }
    for g in gens {
        if !g.is_square() || g.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "generator of size {}×{} in dimension {n}",
                g.rows(),
                g.cols()
            )));
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if a.mul(b) != b.mul(a) {
                return Err(Error::NonCommuting);
            }
        }
    }
    Ok(n)
}

/// Minimal polynomial of a square rational matrix.
pub fn matrix_min_poly(m: &RatMatrix) -> RatPoly {
    let n = m.rows();
    let mut powers: Vec<Vec<BigRational>> = vec![flatten(&RatMatrix::identity(n))];
    let mut current = RatMatrix::identity(n);
    loop {
        current = current.mul(m);
        let v = flatten(&current);
        let span = Matrix::from_rows(&powers);
        if let Some(c) = span.solve_left(&v) {
            let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(BigRational::one());
            return RatPoly::new(coeffs);
        }
        powers.push(v);
    }
}

/// Basis of the unital algebra generated by `gens`, identity first.
pub fn algebra_closure(gens: &[RatMatrix]) -> Result<Vec<RatMatrix>> {
    let n = check_generators(gens)?;
    let mut basis = vec![RatMatrix::identity(n)];
    let mut rows = vec![flatten(&basis[0])];
    let mut next = 0;
    while next < basis.len() {
        let b = basis[next].clone();
        next += 1;
        for g in gens {
            let prod = g.mul(&b);
            let v = flatten(&prod);
            if Matrix::from_rows(&rows).solve_left(&v).is_none() {
                rows.push(v);
                basis.push(prod);
                if basis.len() > n {
                    return Err(Error::NonSemisimple(format!(
                        "commutative algebra of dimension > {n} in M_{n}"
                    )));
                }
            }
        }
    }
    for g in gens {
        let mp = matrix_min_poly(g).to_primitive_int();
        if !mp.is_squarefree() {
            return Err(Error::NonSemisimple(format!("minimal polynomial {mp} is not squarefree")));
        }
    }
    if abstract_trace_gram(&basis).det().is_zero() {
        return Err(Error::NonSemisimple("trace form is degenerate".into()));
    }
    Ok(basis)
}

/// `Tr_{E/ℚ}(b_i b_j)` for a basis of a commutative algebra `E`, the trace taken
/// on `E` itself.
pub fn abstract_trace_gram(basis: &[RatMatrix]) -> RatMatrix {
    let d = basis.len();
    let span = Matrix::from_rows(&basis.iter().map(flatten).collect::<Vec<_>>());
    let coords = |m: &RatMatrix| span.solve_left(&flatten(m)).expect("algebra is closed");
    let traces: Vec<BigRational> = basis
        .iter()
        .map(|x| {
            (0..d).fold(BigRational::zero(), |acc, k| acc + &coords(&x.mul(&basis[k]))[k])
        })
        .collect();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let c = coords(&basis[i].mul(&basis[j]));
            let t = c.iter().zip(&traces).fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

/// `Λ = E ∩ M_n(ℤ)` as a saturated lattice of flattened matrices.
pub fn matrix_order(basis: &[RatMatrix], n: usize) -> IntegerLattice {
    let rows: Vec<Vec<BigRational>> = basis.iter().map(flatten).collect();
    let lattice = integral_points_of_span(&Matrix::from_rows(&rows));
    debug_assert!(lattice.contains(&flatten(&Matrix::<BigInt>::identity(n))));
    lattice
}

pub fn lattice_matrices(l: &IntegerLattice, n: usize) -> Vec<RatMatrix> {
    l.basis()
        .row_iter()
        .map(|r| unflatten(n, &r.iter().map(|x| BigRational::from_integer(x.clone())).collect::<Vec<_>>()))
        .collect()
}
