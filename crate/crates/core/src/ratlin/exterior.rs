//! Exterior powers ∧^d ℚ^m in the basis of increasing d-subsets (lex order).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix, RatMatrix};

/// Above this many coordinates a wedge is stored sparsely.
pub const DENSE_LIMIT: u128 = 100_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Lexicographic rank of an increasing subset of `0..m`.
pub fn subset_rank(subset: &[usize], m: usize) -> u128 {
    let d = subset.len();
    let mut rank = 0u128;
    let mut prev = 0usize;
    for (i, &s) in subset.iter().enumerate() {
        for skipped in prev..s {
            rank += binomial(m - skipped - 1, d - i - 1);
        }
        prev = s + 1;
    }
    rank
}

/// Calls `f` on every increasing `d`-subset of `0..m` in lexicographic order.
pub fn for_each_subset(m: usize, d: usize, mut f: impl FnMut(&[usize])) {
    if d > m {
        return;
    }
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        f(&idx);
        let Some(i) = (0..d).rev().find(|&i| idx[i] != i + m - d) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coords<T> {
    Dense(Vec<T>),
    Sparse(BTreeMap<u128, T>),
}

/// An element of ∧^d K^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorVector<T> {
    pub ambient: usize,
    pub degree: usize,
    pub coords: Coords<T>,
}

impl<T: Clone + Zero> ExteriorVector<T> {
    pub fn len(&self) -> u128 {
        binomial(self.ambient, self.degree)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, rank: u128) -> T {
        match &self.coords {
            Coords::Dense(v) => v[rank as usize].clone(),
            Coords::Sparse(m) => m.get(&rank).cloned().unwrap_or_else(T::zero),
        }
    }

    /// Nonzero coordinates in increasing rank order.
    pub fn nonzero(&self) -> Vec<(u128, T)> {
        match &self.coords {
            Coords::Dense(v) => v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u128, x.clone()))
                .collect(),
            Coords::Sparse(m) => m.iter().map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero().is_empty()
    }

    /// Dense coordinate list; panics beyond the dense limit.
    pub fn to_dense(&self) -> Vec<T> {
        match &self.coords {
            Coords::Dense(v) => v.clone(),
            Coords::Sparse(m) => {
                let n = usize::try_from(self.len()).expect("dense size");
                let mut v = vec![T::zero(); n];
                for (k, x) in m {
                    v[*k as usize] = x.clone();
                }
                v
            }
        }
    }

    fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> ExteriorVector<U> {
        let coords = match &self.coords {
            Coords::Dense(v) => Coords::Dense(v.iter().map(&f).collect()),
            Coords::Sparse(m) => Coords::Sparse(
                m.iter()
                    .map(|(k, v)| (*k, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            ),
        };
        ExteriorVector {
            ambient: self.ambient,
            degree: self.degree,
            coords,
        }
    }
}

fn wedge_with<T: Clone + Zero>(
    m: usize,
    d: usize,
    minor: impl Fn(&[usize]) -> T,
) -> ExteriorVector<T> {
    let coords = if binomial(m, d) <= DENSE_LIMIT {
        let mut v = Vec::with_capacity(binomial(m, d) as usize);
        for_each_subset(m, d, |s| v.push(minor(s)));
        Coords::Dense(v)
    } else {
        let mut map = BTreeMap::new();
        let mut rank = 0u128;
        for_each_subset(m, d, |s| {
            let x = minor(s);
            if !x.is_zero() {
                map.insert(rank, x);
            }
            rank += 1;
        });
        Coords::Sparse(map)
    };
    ExteriorVector {
        ambient: m,
        degree: d,
        coords,
    }
}

/// `v_1 ∧ … ∧ v_d` for the rows of `vectors`.
pub fn wedge(vectors: &RatMatrix) -> ExteriorVector<BigRational> {
    let (d, m) = (vectors.rows(), vectors.cols());
    assert!(d >= 1 && d <= m, "wedge needs 1 ≤ d ≤ m");
    let (den, ints) = vectors.clear_denominators();
    let scale = BigRational::from_integer(num_traits::pow(den, d));
    wedge_int(&ints).map(|x| BigRational::from_integer(x.clone()) / &scale)
}

/// Integer wedge of integer rows: the d×d minors.
pub fn wedge_int(vectors: &IntMatrix) -> ExteriorVector<BigInt> {
    let (d, m) = (vectors.rows(), vectors.cols());
    assert!(d >= 1 && d <= m, "wedge needs 1 ≤ d ≤ m");
    // skip columns that vanish identically
    let live: Vec<bool> = (0..m)
        .map(|j| (0..d).any(|i| !vectors[(i, j)].is_zero()))
        .collect();
    wedge_with(m, d, |s| {
        if s.iter().any(|&j| !live[j]) {
            return BigInt::zero();
        }
        vectors.select_cols(s).det()
    })
}

/// gcd of all coordinates.
pub fn content(v: &ExteriorVector<BigInt>) -> BigInt {
    v.nonzero()
        .iter()
        .fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x))
}

/// Flips the sign so the first nonzero coordinate is positive.
pub fn normalize_sign(v: &ExteriorVector<BigInt>) -> ExteriorVector<BigInt> {
    match v.nonzero().first() {
        Some((_, x)) if x.is_negative() => v.map(|c| -c),
        _ => v.clone(),
    }
}

pub fn is_primitive(v: &ExteriorVector<BigInt>) -> bool {
    content(v).is_one()
}

/// Dense matrix of the induced action `∧^d A` on ∧^d for a linear map
/// given by its matrix `a` acting on row vectors (`v ↦ v·a`).
pub fn exterior_power_of_map(a: &RatMatrix, d: usize) -> RatMatrix {
    let m = a.rows();
    let n = usize::try_from(binomial(m, d)).expect("size");
    let mut out = Matrix::zeros(n, n);
    let mut i = 0;
    for_each_subset(m, d, |rows| {
        let sub = a.select_rows(rows);
        let w = wedge(&sub).to_dense();
        for (j, x) in w.into_iter().enumerate() {
            out[(i, j)] = x;
        }
        i += 1;
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::matrix::rat;

    #[test]
    fn subset_ranks_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(subset_rank(s, 5)));
        assert_eq!(seen, (0..10).collect::<Vec<u128>>());
        assert_eq!(binomial(16, 4), 1820);
    }

    #[test]
    fn wedge_examples() {
        let e = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(wedge(&e).to_dense(), vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        let v = RatMatrix::from_i64(&[&[1, 0, 0, 1], &[0, -1, 4, 0]]);
        let expect: Vec<BigRational> = [-1, 4, 0, 0, 1, -4].iter().map(|&x| rat(x, 1)).collect();
        assert_eq!(wedge(&v).to_dense(), expect);
        let same = RatMatrix::from_i64(&[&[1, 2, 3], &[1, 2, 3]]);
        assert!(wedge(&same).is_zero());
    }

    #[test]
    fn rational_wedge_scales() {
        let v = RatMatrix::from_rows(&[vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]]);
        assert_eq!(wedge(&v).to_dense(), vec![rat(1, 6)]);
    }

    #[test]
    fn sparse_storage_above_limit() {
        // C(40, 4) = 91390 stays dense, C(60, 4) > 1e5 goes sparse
        let mut rows = vec![vec![0i64; 60]; 4];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = 1;
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let w = wedge_int(&IntMatrix::from_i64(&refs));
        assert!(matches!(w.coords, Coords::Sparse(_)));
        assert_eq!(w.nonzero(), vec![(0, BigInt::one())]);
    }
}
