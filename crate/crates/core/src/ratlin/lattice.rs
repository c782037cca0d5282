//! Integer lattices in canonical Hermite normal form, Smith normal form,
//! indices, saturation and duals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{rat_int, IntMatrix, Matrix, RatMatrix};
use crate::error::{Error, Result};

/// Sublattice of ℤ^m with its basis in row Hermite normal form.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`, so
/// two equal lattices carry bit-identical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl IntegerLattice {
    /// Lattice spanned by the rows of `m`.
    pub fn from_generators(m: &IntMatrix) -> Self {
        hnf(m)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        IntegerLattice {
            ambient_dim,
            basis: IntMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn standard(ambient_dim: usize) -> Self {
        IntegerLattice {
            ambient_dim,
            basis: IntMatrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut col = 0;
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            while row[col].is_zero() {
                if !rest[col].is_zero() {
                    return None;
                }
                col += 1;
            }
            let (q, r) = rest[col].div_rem(&row[col]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
            col += 1;
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.row_iter().all(|r| self.contains(r))
    }

    /// Sum of two lattices.
    pub fn join(&self, other: &IntegerLattice) -> IntegerLattice {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        hnf(&self.basis.vstack(&other.basis))
    }

    pub fn scaled(&self, k: &BigInt) -> IntegerLattice {
        hnf(&self.basis.map(|x| x * k))
    }

    /// Image under `v ↦ v·m`.
    pub fn transform(&self, m: &IntMatrix) -> IntegerLattice {
        assert_eq!(m.rows(), self.ambient_dim);
        if self.rank() == 0 {
            return IntegerLattice::zero(m.cols());
        }
        hnf(&self.basis.mul(m))
    }

    pub fn is_saturated(&self) -> bool {
        saturate(self) == *self
    }

    /// |det| of the basis when full rank, the covolume in ℤ^m.
    pub fn covolume(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| self.basis.det().abs())
    }
}

/// Row Hermite normal form of the lattice spanned by the rows of `m`.
pub fn hnf(m: &IntMatrix) -> IntegerLattice {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below row r
            let best = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()));
            let Some(p) = best else { break };
            a.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = a[(i, c)].div_floor(&a[(r, c)]);
                sub_row_multiple(&mut a, i, r, &q);
                if !a[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            for x in a.row_mut(r) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            if !q.is_zero() {
                sub_row_multiple(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    let idx: Vec<usize> = (0..r).collect();
    IntegerLattice {
        ambient_dim: cols,
        basis: a.select_rows(&idx),
    }
}

fn sub_row_multiple(a: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for j in 0..a.cols() {
        let v = q * &a[(source, j)];
        a[(target, j)] -= v;
    }
}

fn sub_col_multiple(a: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for i in 0..a.rows() {
        let v = q * &a[(i, source)];
        a[(i, target)] -= v;
    }
}

/// Smith form `U·m·V = D` with `U`, `V` unimodular.
///
/// Returns the diagonal `d_1 | d_2 | …` (length `min(rows, cols)`) and
/// `V⁻¹`, whose first `rank` rows span the saturation of the row lattice.
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub v_inverse: IntMatrix,
}

pub fn smith(m: &IntMatrix) -> Smith {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    // column operations applied to `a` are mirrored inversely on the rows of `w`
    let mut w = IntMatrix::identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        w.swap_rows(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                sub_row_multiple(&mut a, i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                sub_col_multiple(&mut a, j, t, &q);
                // col_j -= q col_t  ⇒  row_t of W += q row_j
                for k in 0..cols {
                    let v = &q * &w[(j, k)];
                    w[(t, k)] += v;
                }
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let mut best = (t, t);
                for i in t..rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap_rows(t, best.0);
                } else if best.1 != t {
                    a.swap_cols(t, best.1);
                    w.swap_rows(t, best.1);
                }
                continue;
            }
            // divisibility condition on the remaining block
            let p = a[(t, t)].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        let v = a[(i, j)].clone();
                        a[(t, j)] += v;
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -&a[(t, j)];
            }
        }
    }
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Smith {
        diagonal,
        v_inverse: w,
    }
}

/// Elementary divisors of `m`, length `min(rows, cols)`, zeros last.
pub fn snf_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    smith(m).diagonal
}

/// Index `[sup : sub]` for lattices of equal rank.
pub fn lattice_index(sub: &IntegerLattice, sup: &IntegerLattice) -> Result<BigInt> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "ambient {} vs {}",
            sub.ambient_dim, sup.ambient_dim
        )));
    }
    if sub.rank() != sup.rank() {
        return Err(Error::RankMismatch(sub.rank(), sup.rank()));
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for row in sub.basis.row_iter() {
        coords.push(sup.coordinates(row).ok_or(Error::NotSublattice)?);
    }
    if coords.is_empty() {
        return Ok(BigInt::one());
    }
    let c = Matrix::from_rows(&coords);
    Ok(snf_diagonal(&c).iter().product())
}

/// `(L ⊗ ℚ) ∩ ℤ^m`.
pub fn saturate(l: &IntegerLattice) -> IntegerLattice {
    if l.rank() == 0 {
        return l.clone();
    }
    let s = smith(&l.basis);
    let idx: Vec<usize> = (0..l.rank()).collect();
    hnf(&s.v_inverse.select_rows(&idx))
}

/// Saturated lattice `V ∩ ℤ^m` for the ℚ-span `V` of rational rows.
pub fn integral_points_of_span(rows: &RatMatrix) -> IntegerLattice {
    let mut scaled = Vec::with_capacity(rows.rows());
    for r in rows.row_iter() {
        let d = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scaled.push(r.iter().map(|x| (x * rat_int(&d)).to_integer()).collect::<Vec<_>>());
    }
    if scaled.is_empty() {
        return IntegerLattice::zero(rows.cols());
    }
    saturate(&hnf(&Matrix::from_rows(&scaled)))
}

/// Integer left kernel `{x ∈ ℤ^m : x·a = 0}` as a saturated lattice.
pub fn integer_left_kernel(a: &IntMatrix) -> IntegerLattice {
    integral_points_of_span(&a.to_rat().left_kernel())
}

/// Lattice with a rational basis, stored as `numerators / denominator`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalLattice {
    pub denominator: BigInt,
    pub numerators: IntegerLattice,
}

impl RationalLattice {
    pub fn from_rational_rows(rows: &RatMatrix) -> Self {
        let (d, m) = rows.clear_denominators();
        let numerators = hnf(&m);
        // strip common factors between denominator and every numerator entry
        let g = numerators
            .basis()
            .as_slice()
            .iter()
            .fold(d.clone(), |acc, x| acc.gcd(x));
        let g = if g.is_zero() { BigInt::one() } else { g };
        RationalLattice {
            denominator: &d / &g,
            numerators: hnf(&numerators.basis().map(|x| x / &g)),
        }
    }

    pub fn basis(&self) -> RatMatrix {
        self.numerators
            .basis()
            .map(|x| BigRational::new(x.clone(), self.denominator.clone()))
    }

    pub fn rank(&self) -> usize {
        self.numerators.rank()
    }
}

/// Dual lattice and its index.
#[derive(Clone, Debug)]
pub struct DualLattice {
    pub dual: RationalLattice,
    /// `[L^⊥ : L] = |det Gram|`.
    pub index: BigInt,
    pub gram_det: BigRational,
}

/// Gram matrix `b·B·bᵀ` of the form `form` (ambient coordinates) on the rows of `basis`.
pub fn gram(basis: &RatMatrix, form: &RatMatrix) -> RatMatrix {
    basis.mul(form).mul(&basis.transpose())
}

/// `L^⊥ = {x ∈ L⊗ℚ : B(x, L) ⊆ ℤ}` for the ambient bilinear form `form`.
pub fn dual_lattice(l: &IntegerLattice, form: &RatMatrix) -> Result<DualLattice> {
    if form.rows() != l.ambient_dim || !form.is_square() {
        return Err(Error::DimensionMismatch("form size vs ambient dimension".into()));
    }
    let b = l.basis.to_rat();
    let g = gram(&b, form);
    let det = g.det();
    if det.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let dual_basis = g.inverse()?.mul(&b);
    let index = det.abs();
    debug_assert!(index.is_integer() || !form.is_integral());
    Ok(DualLattice {
        dual: RationalLattice::from_rational_rows(&dual_basis),
        index: index.to_integer(),
        gram_det: det,
    })
}
