//! Factorization of integer polynomials over ℚ: squarefree reduction,
//! Cantor–Zassenhaus modulo a small prime, quadratic Hensel lifting and
//! subset recombination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::is_prime_u64;
use super::poly::{rat_gcd, IntPolynomial, ModPoly};
use crate::error::{Error, Result};

pub const MAX_FACTOR_DEGREE: usize = 12;

/// Factors `f` into primitive irreducible integer polynomials with positive
/// leading coefficients, returned with multiplicities in sorted order.
pub fn factor_over_q(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    let n = f.degree();
    if n == 0 || f.is_zero() {
        return Err(Error::InvalidInput("factor_over_q needs degree ≥ 1".into()));
    }
    if n > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: MAX_FACTOR_DEGREE,
        });
    }
    let f = f.primitive_part();
    let g = rat_gcd(&f.to_rat(), &f.derivative().to_rat()).to_primitive_int();
    let sqf = f.div_exact(&g).expect("gcd divides").primitive_part();
    let mut out = Vec::new();
    for p in zassenhaus(&sqf) {
        let mut rest = f.clone();
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&p) {
            rest = q;
            mult += 1;
        }
        out.push((p, mult));
    }
    out.sort();
    Ok(out)
}

pub fn is_irreducible(f: &IntPolynomial) -> Result<bool> {
    let fs = factor_over_q(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Irreducible factors of a primitive squarefree polynomial.
fn zassenhaus(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.primitive_part()];
    }
    let lc = f.leading().clone();
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 5 {
        p += 2;
        if !is_prime_u64(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = f.reduce_mod(p);
        if fp.degree() != n || fp.gcd(&fp.derivative()).degree() > 0 {
            continue;
        }
        tried += 1;
        let count: usize = fp.monic().distinct_degree().iter().map(|(g, d)| g.degree() / d).sum();
        if best.as_ref().is_none_or(|(_, fs)| count < fs.len()) {
            best = Some((p, factor_mod_p(&fp)));
        }
        if count == 1 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime is good");
    if modular.len() == 1 {
        return vec![f.primitive_part()];
    }
    // coefficient bound for factors of f, times |lc|
    let bound = BigInt::from(2u32).pow(n as u32) * BigInt::from(n + 1) * f.height() * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        k += 1;
        modulus *= &pb;
    }
    let lifted = multifactor_lift(f.coeffs(), &modular, p, k);
    recombine(f, lifted, &modulus)
}

/// Complete factorization of `f` mod p into monic irreducibles (p odd).
pub fn factor_mod_p(f: &ModPoly) -> Vec<ModPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ f.p);
    let mut out = Vec::new();
    for (part, _) in f.squarefree_factorization() {
        for (g, d) in part.distinct_degree() {
            equal_degree(&g, d, &mut rng, &mut out);
        }
    }
    out.sort_by(|a, b| a.coeffs.len().cmp(&b.coeffs.len()).then(a.coeffs.cmp(&b.coeffs)));
    out
}

fn pow_mod_big(base: &ModPoly, e: &BigUint, m: &ModPoly) -> ModPoly {
    let mut acc = ModPoly::one(base.p).rem(m);
    let b = base.rem(m);
    for i in (0..e.bits()).rev() {
        acc = acc.mul(&acc).rem(m);
        if e.bit(i) {
            acc = acc.mul(&b).rem(m);
        }
    }
    acc
}

fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = f.degree();
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    assert!(p % 2 == 1, "equal-degree splitting needs odd p");
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = ModPoly::new((0..n).map(|_| rng.random_range(0..p)).collect(), p);
        if a.degree() == 0 {
            continue;
        }
        let g = a.gcd(f);
        if g.degree() > 0 && g.degree() < n {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
        let b = pow_mod_big(&a, &e, f).sub(&ModPoly::one(p));
        let g = b.gcd(f);
        if g.degree() > 0 && g.degree() < n {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

// Polynomials over ℤ/m as coefficient vectors, constant term first.
type ZPoly = Vec<BigInt>;

fn zp_trim(mut a: ZPoly) -> ZPoly {
    while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zp_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    zp_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_mod(&out, m)
}

fn zp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    zp_mod(&out, m)
}

fn zp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    zp_mod(&out, m)
}

/// Division by a monic divisor over ℤ/m.
fn zp_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let b = zp_trim(b.to_vec());
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let a = zp_mod(a, m);
    if a.len() <= db {
        return (vec![BigInt::zero()], a);
    }
    let mut rem = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    rem.truncate(db.max(1));
    (zp_mod(&q, m), zp_mod(&rem, m))
}

fn to_zp(f: &ModPoly) -> ZPoly {
    f.coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ lc·∏ factors (mod p)` to monic factors modulo p^k.
fn multifactor_lift(f: &[BigInt], factors: &[ModPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let big_m = BigInt::from(p).pow(k);
    let f = zp_mod(f, &big_m);
    if factors.len() == 1 {
        let lc = f.last().expect("nonempty").clone();
        let inv = lc.modinv(&big_m).expect("lc is a unit");
        let monic: Vec<BigInt> = f.iter().map(|c| c * &inv).collect();
        return vec![zp_mod(&monic, &big_m)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = (f.last().expect("nonempty") % BigInt::from(p))
        .to_u64_digits()
        .1
        .first()
        .copied()
        .unwrap_or(0);
    let g0 = left
        .iter()
        .fold(ModPoly::new(vec![lc_p], p), |acc, g| acc.mul(g));
    let h0 = right.iter().fold(ModPoly::one(p), |acc, h| acc.mul(h));
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());
    let (mut g, mut h, mut s, mut t) = (to_zp(&g0), to_zp(&h0), to_zp(&s0), to_zp(&t0));
    let pb = BigInt::from(p);
    let mut e = 1u32;
    while e < k {
        let ne = (2 * e).min(k);
        let m2 = pb.pow(ne);
        let err = zp_sub(&f, &zp_mul(&g, &h, &m2), &m2);
        let (q, r) = zp_divrem_monic(&zp_mul(&s, &err, &m2), &h, &m2);
        let g_new = zp_add(&zp_add(&g, &zp_mul(&t, &err, &m2), &m2), &zp_mul(&q, &g, &m2), &m2);
        let h_new = zp_add(&h, &r, &m2);
        let b = zp_sub(
            &zp_add(&zp_mul(&s, &g_new, &m2), &zp_mul(&t, &h_new, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = zp_divrem_monic(&zp_mul(&s, &b, &m2), &h_new, &m2);
        s = zp_sub(&s, &d, &m2);
        t = zp_sub(&zp_sub(&t, &zp_mul(&t, &b, &m2), &m2), &zp_mul(&c, &g_new, &m2), &m2);
        g = g_new;
        h = h_new;
        e = ne;
    }
    let mut out = multifactor_lift(&g, left, p, k);
    out.extend(multifactor_lift(&h, right, p, k));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::new(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn recombine(f: &IntPolynomial, lifted: Vec<ZPoly>, m: &BigInt) -> Vec<IntPolynomial> {
    let mut rest = f.clone();
    let mut pool = lifted;
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut found = None;
        for_each_combination(pool.len(), size, |subset| {
            let lc = rest.leading().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| zp_mul(&acc, &pool[i], m));
            let cand = symmetric(&prod, m).primitive_part();
            if cand.degree() == 0 {
                return false;
            }
            if let Some(q) = rest.div_exact(&cand) {
                found = Some((subset.to_vec(), cand, q));
                return true;
            }
            false
        });
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                rest = q.primitive_part();
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if rest.degree() > 0 {
        out.push(rest.primitive_part());
    }
    out
}

/// Visits k-subsets of `0..n` until the callback returns `true`.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
