//! Sublattices of the cocharacter lattice `ℤ^N` fixed or stabilized by
//! permutation groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::{all_perms, Perm, PermGroup};
use super::subgroups::subgroup_conjugacy_classes;
use crate::error::Result;
use crate::ratlin::factor::factor_over_q;
use crate::ratlin::lattice::{hnf, integer_left_kernel, integral_points_of_span, IntegerLattice};
use crate::ratlin::matrix::{rat_int, IntMatrix, Matrix, RatMatrix};
use crate::torus::matrix_min_poly;

pub const MAX_WEYL_DEGREE: usize = 8;
pub const MAX_STABLE_DEGREE: usize = 6;

/// Vectors fixed by every element of `u`, as a saturated lattice.
pub fn fixed_lattice(u: &PermGroup) -> IntegerLattice {
    let n = u.degree();
    let mut cols = Vec::new();
    for g in u.generators() {
        for i in 0..n {
            let mut c = vec![BigInt::zero(); n];
            c[g.apply(i)] += 1;
            c[i] -= 1;
            cols.push(c);
        }
    }
    if cols.is_empty() {
        return IntegerLattice::standard(n);
    }
    // columns (e_{σ(i)} − e_i) of a matrix whose left kernel is the fixed space
    integer_left_kernel(&Matrix::from_rows(&cols).transpose())
}

/// `σ·L` under `(σx)_{σ(i)} = x_i`.
pub fn permute_lattice(l: &IntegerLattice, sigma: &Perm) -> IntegerLattice {
    let rows: Vec<Vec<BigInt>> = l.basis().row_iter().map(|r| sigma.act(r)).collect();
    if rows.is_empty() {
        return l.clone();
    }
    hnf(&Matrix::from_rows(&rows))
}

/// A Weyl-conjugacy class of fixed lattices `L_U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusClass {
    pub fixed_lattice: IntegerLattice,
    /// Labels of the subgroup classes whose fixed lattice lies in this class.
    pub witnesses: Vec<String>,
    pub rank: usize,
}

fn canonical_lattice(l: &IntegerLattice, perms: &[Perm]) -> IntegerLattice {
    perms
        .iter()
        .map(|s| permute_lattice(l, s))
        .min_by(|a, b| a.basis().as_slice().cmp(b.basis().as_slice()))
        .expect("nonempty")
}

/// All `L_U` for `U ≤ 𝔖_N`, up to the action of `𝔖_N`, highest rank first.
pub fn enumerate_fixed_lattice_classes(n: usize) -> Result<Vec<SubtorusClass>> {
    let perms = all_perms(n);
    let mut classes: BTreeMap<(std::cmp::Reverse<usize>, Vec<BigInt>), SubtorusClass> = BTreeMap::new();
    for class in subgroup_conjugacy_classes(n)? {
        let l = canonical_lattice(&fixed_lattice(&class.representative), &perms);
        let key = (std::cmp::Reverse(l.rank()), l.basis().as_slice().to_vec());
        classes
            .entry(key)
            .or_insert_with(|| SubtorusClass {
                rank: l.rank(),
                fixed_lattice: l,
                witnesses: Vec::new(),
            })
            .witnesses
            .push(class.label);
    }
    Ok(classes.into_values().collect())
}

/// `π_i(L) = g_i·ℤ`: the gcd of coordinate `i` over `L`.
fn coordinate_gcds(l: &IntegerLattice) -> Vec<BigInt> {
    (0..l.ambient_dim())
        .map(|j| l.basis().row_iter().fold(BigInt::zero(), |acc, r| acc.gcd(&r[j])))
        .collect()
}

/// A permutation `σ` with `σ·L1 = L2`, found by backtracking over `𝔖_N`.
pub fn weyl_conjugate_test(l1: &IntegerLattice, l2: &IntegerLattice) -> Option<Perm> {
    let n = l1.ambient_dim();
    if n != l2.ambient_dim() || l1.rank() != l2.rank() || n > MAX_WEYL_DEGREE {
        return None;
    }
    let (s1, s2) = (coordinate_gcds(l1), coordinate_gcds(l2));
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn search(
        i: usize,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        s1: &[BigInt],
        s2: &[BigInt],
        l1: &IntegerLattice,
        l2: &IntegerLattice,
    ) -> Option<Perm> {
        let n = sigma.len();
        if i == n {
            let p = Perm(sigma.clone());
            return (permute_lattice(l1, &p) == *l2).then_some(p);
        }
        for j in 0..n {
            if used[j] || s1[i] != s2[j] {
                continue;
            }
            sigma[i] = j;
            used[j] = true;
            if let Some(p) = search(i + 1, sigma, used, s1, s2, l1, l2) {
                return Some(p);
            }
            used[j] = false;
        }
        None
    }
    search(0, &mut sigma, &mut used, &s1, &s2, l1, l2)
}

/// Why stable sublattices were not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicReport {
    /// `⟨χ, χ⟩`, the dimension of the commutant.
    pub character_norm: usize,
    /// Multiplicity of the trivial character, the number of orbits.
    pub trivial_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableSublattices {
    /// Every stable saturated sublattice, indexed by subsets of the rational
    /// isotypic components.
    Lattices(Vec<IntegerLattice>),
    Infinite(IsotypicReport),
}

/// Orbital matrices of `u` acting on pairs, spanning the commutant.
fn orbitals(u: &PermGroup) -> Vec<IntMatrix> {
    let n = u.degree();
    let mut label = vec![usize::MAX; n * n];
    let mut out = Vec::new();
    for start in 0..n * n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut m = IntMatrix::zeros(n, n);
        for g in u.elements() {
            let (i, j) = (g.apply(start / n), g.apply(start % n));
            if label[i * n + j] == usize::MAX {
                label[i * n + j] = out.len();
                m[(i, j)] = BigInt::one();
            }
        }
        out.push(m);
    }
    out
}

pub fn character_norm(u: &PermGroup) -> usize {
    let total: usize = u.elements().iter().map(|g| g.fixed_points().pow(2)).sum();
    total / u.order()
}

/// Stable saturated sublattices of `ℤ^N` under `u`, when there are finitely many.
pub fn stable_subspace_enumeration(u: &PermGroup) -> StableSublattices {
    let n = u.degree();
    let orbs = orbitals(u);
    let norm = character_norm(u);
    debug_assert_eq!(norm, orbs.len());
    let commutative = orbs.iter().enumerate().all(|(i, a)| orbs[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)));
    if !commutative || n > MAX_STABLE_DEGREE {
        return StableSublattices::Infinite(IsotypicReport {
            character_norm: norm,
            trivial_multiplicity: u.orbits().len(),
        });
    }
    // a primitive element of the commutative commutant separates its components
    let mut rng = ChaCha8Rng::seed_from_u64(0xa71a5);
    let z = loop {
        let z = orbs.iter().fold(RatMatrix::zeros(n, n), |acc, a| {
            acc.add(&a.to_rat().scale(&BigRational::from_integer(rng.random_range(-3i64..=3).into())))
        });
        if matrix_min_poly(&z).degree() == orbs.len() {
            break z;
        }
    };
    let mp = matrix_min_poly(&z).to_primitive_int();
    let components: Vec<RatMatrix> = factor_over_q(&mp)
        .expect("commutant degree is small")
        .into_iter()
        .map(|(f, _)| {
            // f(z) by Horner, then its kernel on column vectors
            let fz = f.coeffs().iter().rev().fold(RatMatrix::zeros(n, n), |acc, c| {
                acc.mul(&z).add(&RatMatrix::identity(n).scale(&rat_int(c)))
            });
            fz.transpose().left_kernel()
        })
        .collect();
    let t = components.len();
    let mut out = Vec::with_capacity(1 << t);
    for mask in 0u32..(1 << t) {
        let parts: Vec<RatMatrix> = (0..t).filter(|i| mask & (1 << i) != 0).map(|i| components[i].clone()).collect();
        if parts.is_empty() {
            out.push(IntegerLattice::zero(n));
        } else {
            out.push(integral_points_of_span(&Matrix::vstack_all(&parts, n)));
        }
    }
    StableSublattices::Lattices(out)
}

/// `u` maps `l` into itself.
pub fn is_stable(l: &IntegerLattice, u: &PermGroup) -> bool {
    u.generators().iter().all(|g| l.contains_lattice(&permute_lattice(l, g)))
}
