//! Galois groups of polynomials as permutation groups on their roots.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::perm::PermGroup;
use super::subgroups::{subgroup_conjugacy_classes, MAX_SUBGROUP_DEGREE};
use crate::error::{Error, Result};
use crate::numfield::{small_galois_group, SmallGaloisGroup};
use crate::ratlin::factor::is_irreducible;
use crate::ratlin::poly::IntPolynomial;

pub const SAMPLED_PRIMES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GaloisMode {
    /// Discriminant and resolvent-cubic tests, degree ≤ 4.
    #[default]
    Exact,
    /// Frobenius cycle types at the first good primes.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisAction {
    pub group: PermGroup,
    pub certified: bool,
    /// Transitive groups consistent with the observations (sampled mode).
    pub candidates: Vec<PermGroup>,
    /// Cycle types seen among Frobenius elements (sampled mode).
    pub observed: BTreeSet<Vec<usize>>,
}

pub fn small_group_as_perms(g: SmallGaloisGroup) -> PermGroup {
    use SmallGaloisGroup::*;
    let build = |n: usize, gens: &[&[&[usize]]]| PermGroup::from_cycle_lists(n, gens).expect("valid cycles");
    match g {
        Trivial => PermGroup::trivial(1),
        C2 => build(2, &[&[&[1, 2]]]),
        C3 => build(3, &[&[&[1, 2, 3]]]),
        S3 => build(3, &[&[&[1, 2, 3]], &[&[1, 2]]]),
        C4 => build(4, &[&[&[1, 2, 3, 4]]]),
        V4 => build(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]),
        D4 => build(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
        A4 => build(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]),
        S4 => build(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]),
    }
}

pub fn galois_perm_action(f: &IntPolynomial, mode: GaloisMode) -> Result<GaloisAction> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    match mode {
        GaloisMode::Exact => {
            let g = small_galois_group(f)?;
            if !is_irreducible(f)? {
                return Err(Error::NotIrreducible);
            }
            let group = small_group_as_perms(g);
            Ok(GaloisAction {
                candidates: vec![group.clone()],
                group,
                certified: true,
                observed: BTreeSet::new(),
            })
        }
        GaloisMode::Sampled => {
            if n > MAX_SUBGROUP_DEGREE {
                return Err(Error::DegreeTooLarge {
                    degree: n,
                    cap: MAX_SUBGROUP_DEGREE,
                });
            }
            if !is_irreducible(f)? {
                return Err(Error::NotIrreducible);
            }
            let observed = frobenius_cycle_types(f, SAMPLED_PRIMES);
            let mut candidates: Vec<PermGroup> = subgroup_conjugacy_classes(n)?
                .into_iter()
                .map(|c| c.representative)
                .filter(|g| g.is_transitive() && g.cycle_types().is_superset(&observed))
                .collect();
            candidates.sort_by_key(PermGroup::order);
            Ok(GaloisAction {
                group: candidates[0].clone(),
                certified: candidates.len() == 1,
                candidates,
                observed,
            })
        }
    }
}

/// Factorization patterns of `f` modulo the first `count` primes not dividing
/// its discriminant.
pub fn frobenius_cycle_types(f: &IntPolynomial, count: usize) -> BTreeSet<Vec<usize>> {
    let disc = f.discriminant();
    let mut out = BTreeSet::new();
    let mut seen = 0;
    let mut p = 1u64;
    while seen < count {
        p += 1;
        if !crate::ratlin::arith::is_prime_u64(p) || (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        seen += 1;
        let mut t = f.reduce_mod(p).irreducible_factor_degrees();
        t.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn exact_examples() {
        let a = galois_perm_action(&poly(&[1, 0, 1]), GaloisMode::Exact).unwrap();
        assert!(a.certified && a.group.order() == 2);
        assert_eq!(galois_perm_action(&poly(&[-1, -3, 0, 1]), GaloisMode::Exact).unwrap().group.order(), 3);
        assert_eq!(galois_perm_action(&poly(&[-2, 0, 0, 1]), GaloisMode::Exact).unwrap().group.order(), 6);
        assert_eq!(
            galois_perm_action(&poly(&[-1, 0, 1]), GaloisMode::Exact),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn sampled_agrees_with_exact() {
        for c in [
            &[1, 0, 1][..],
            &[-1, -3, 0, 1],
            &[-2, 0, 0, 1],
            &[1, 0, 0, 0, 1],
            &[1, 1, 1, 1, 1],
            &[-2, 0, 0, 0, 1],
            &[12, 8, 0, 0, 1],
            &[-1, -1, 0, 0, 1],
        ] {
            let exact = galois_perm_action(&poly(c), GaloisMode::Exact).unwrap();
            let sampled = galois_perm_action(&poly(c), GaloisMode::Sampled).unwrap();
            assert!(sampled.candidates.iter().any(|g| g.order() == exact.group.order()
                && g.cycle_types() == exact.group.cycle_types()));
            assert_eq!(sampled.group.order(), exact.group.order(), "{c:?}");
        }
    }

    #[test]
    fn quintics() {
        // x^5 - x - 1 has group S5; x^5 - 2 has the Frobenius group of order 20
        let s5 = galois_perm_action(&poly(&[-1, -1, 0, 0, 0, 1]), GaloisMode::Sampled).unwrap();
        assert_eq!(s5.group.order(), 120);
        assert!(s5.certified);
        let f20 = galois_perm_action(&poly(&[-2, 0, 0, 0, 0, 1]), GaloisMode::Sampled).unwrap();
        assert_eq!(f20.group.order(), 20);
    }
}
