//! Univariate polynomials over ℤ, ℚ and 𝔽_p. Coefficients are stored
//! constant term first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::{inv_mod, mul_mod};
use super::matrix::IntMatrix;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are trimmed; the zero polynomial is `[0]`.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::constant(BigInt::zero());
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division over ℤ, `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero());
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let db = rhs.degree();
        let lb = rhs.leading();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let (c, r) = rem[k + db].div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            q[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Resultant via the Sylvester matrix.
    pub fn resultant(&self, rhs: &Self) -> BigInt {
        let (m, n) = (self.degree(), rhs.degree());
        if m + n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut s = IntMatrix::zeros(size, size);
        for i in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                s[(i, i + j)] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in rhs.coeffs.iter().rev().enumerate() {
                s[(n + i, i + j)] = c.clone();
            }
        }
        s.det()
    }

    /// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree();
        if n <= 1 {
            return BigInt::one();
        }
        let r = self.resultant(&self.derivative());
        let r = r / self.leading();
        if (n * (n - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    pub fn reduce_mod(&self, p: u64) -> ModPoly {
        let pb = BigInt::from(p);
        ModPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pb);
                    u64::try_from(r).expect("residue fits")
                })
                .collect(),
            p,
        )
    }

    /// Monic squarefree test over ℚ.
    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || rat_gcd(&self.to_rat(), &self.derivative().to_rat()).degree() == 0
    }

    /// Maximum absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn monic(&self) -> Self {
        let l = self.coeffs.last().expect("nonempty").clone();
        if l.is_zero() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero());
        if self.degree() < rhs.degree() || self.is_zero() {
            return (Self::new(vec![]), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let db = rhs.degree();
        let lb = rhs.coeffs[db].clone();
        let mut q = vec![BigRational::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let c = &rem[k + db] / &lb;
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            q[k] = c;
        }
        rem.truncate(db.max(1));
        (Self::new(q), Self::new(rem))
    }

    /// Integer polynomial with the same roots: denominators cleared, primitive.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

/// Monic gcd over ℚ.
pub fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Reduces a coefficient vector modulo the monic polynomial `f` (both over ℚ,
/// `f` given by integer coefficients) in place, returning `deg f` coefficients.
pub fn reduce_mod_monic(v: &[BigRational], f: &IntPolynomial) -> Vec<BigRational> {
    let n = f.degree();
    debug_assert!(f.is_monic());
    let mut r = v.to_vec();
    if r.len() < n {
        r.resize(n, BigRational::zero());
    }
    for k in (n..r.len()).rev() {
        let c = std::mem::take(&mut r[k]);
        if c.is_zero() {
            continue;
        }
        for (j, fc) in f.coeffs().iter().enumerate().take(n) {
            r[k - n + j] -= &c * BigRational::from_integer(fc.clone());
        }
    }
    r.truncate(n);
    r
}

/// Product of two elements of ℚ[x]/(f) in power-basis coordinates.
pub fn mul_mod_monic(a: &[BigRational], b: &[BigRational], f: &IntPolynomial) -> Vec<BigRational> {
    let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    reduce_mod_monic(&prod, f)
}

/// Polynomial over 𝔽_p, p prime below 2^63.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ModPoly {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl ModPoly {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        ModPoly { coeffs, p }
    }

    pub fn one(p: u64) -> Self {
        Self::new(vec![1], p)
    }

    pub fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("nonempty")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p).expect("field");
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| mul_mod(c, k, self.p)).collect(), self.p)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(c, self.p)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(c, self.p)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(out, self.p)
    }

    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.degree() < rhs.degree() {
            return (Self::new(vec![0], p), self.clone());
        }
        let inv = inv_mod(rhs.leading(), p).expect("field");
        let mut rem = self.coeffs.clone();
        let db = rhs.degree();
        let mut q = vec![0u64; self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let c = mul_mod(rem[k + db], inv, p);
            if c != 0 {
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - mul_mod(c, b, p)) % p;
                }
            }
            q[k] = c;
        }
        rem.truncate(db.max(1));
        (Self::new(q, p), Self::new(rem, p))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.div_rem(rhs).1
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·rhs = g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::new(vec![0], p));
        let (mut t0, mut t1) = (Self::new(vec![0], p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.leading(), p).expect("field");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
            .collect();
        Self::new(c, self.p)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Coefficientwise p-th root of a polynomial in x^p.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(c, self.p)
    }

    /// Squarefree factorization: `(factor, multiplicity)` with monic factors.
    pub fn squarefree_factorization(&self) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        self.sqf_into(1, &mut out);
        out.sort_by_key(|(f, m)| (*m, f.coeffs.clone()));
        out
    }

    fn sqf_into(&self, mult: usize, out: &mut Vec<(ModPoly, usize)>) {
        let f = self.monic();
        if f.degree() == 0 {
            return;
        }
        let d = f.derivative();
        if d.is_zero() {
            f.pth_root().sqf_into(mult * self.p as usize, out);
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_rem(&c).0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.degree() > 0 {
                out.push((z, i * mult));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if c.degree() > 0 {
            c.pth_root().sqf_into(mult * self.p as usize, out);
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self) -> Vec<(ModPoly, usize)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.degree() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p as u128, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.degree() > 0 {
            let deg = f.degree();
            out.push((f, deg));
        }
        out
    }

    /// Degrees of the distinct monic irreducible factors, sorted.
    pub fn irreducible_factor_degrees(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (part, _) in self.squarefree_factorization() {
            for (g, d) in part.distinct_degree() {
                degs.extend(std::iter::repeat_n(d, g.degree() / d));
            }
        }
        degs.sort_unstable();
        degs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminants() {
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 1]).discriminant(), BigInt::from(-4));
        assert_eq!(IntPolynomial::from_i64(&[-2, 0, 0, 1]).discriminant(), BigInt::from(-108));
        assert_eq!(IntPolynomial::from_i64(&[-1, -3, 0, 1]).discriminant(), BigInt::from(81));
        assert_eq!(
            IntPolynomial::from_i64(&[1, 1, 1, 1, 1]).discriminant(),
            BigInt::from(125)
        );
    }

    #[test]
    fn exact_division() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        let g = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(f.div_exact(&g), Some(IntPolynomial::from_i64(&[-1, 1])));
        assert_eq!(f.div_exact(&IntPolynomial::from_i64(&[1, 2])), None);
    }

    #[test]
    fn mod_p_factor_degrees() {
        // x^4 + 1 splits into quadratics mod 3 and linears mod 17
        let f = IntPolynomial::from_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(f.reduce_mod(3).irreducible_factor_degrees(), vec![2, 2]);
        assert_eq!(f.reduce_mod(17).irreducible_factor_degrees(), vec![1, 1, 1, 1]);
        // x^2 + 1 ≡ (x + 1)^2 mod 2
        let g = IntPolynomial::from_i64(&[1, 0, 1]).reduce_mod(2);
        assert_eq!(g.squarefree_factorization(), vec![(ModPoly::new(vec![1, 1], 2), 2)]);
        assert_eq!(g.irreducible_factor_degrees(), vec![1]);
        // x^3 mod 3: derivative vanishes
        let h = ModPoly::new(vec![0, 0, 0, 1], 3);
        assert_eq!(h.squarefree_factorization(), vec![(ModPoly::x(3), 3)]);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = ModPoly::new(vec![1, 0, 1], 7);
        let b = ModPoly::new(vec![3, 1], 7);
        let (g, s, t) = a.ext_gcd(&b);
        assert!(g.is_one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[-1, -3, 0, 1]).to_string(), "x^3 - 3x - 1");
    }
}
