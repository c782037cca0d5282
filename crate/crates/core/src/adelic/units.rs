//! Unit groups of `O/p^kO` and of its subring `Λ/p^kO`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::order::{to_u64, OrderPair};
use crate::error::{Error, Result};
use crate::numfield::{ModTable, MultTable};
use crate::ratlin::arith::{mul_mod, prime_divisors};
use crate::ratlin::lattice::{hnf, IntegerLattice};
use crate::ratlin::matrix::Matrix;
use crate::ratlin::modp::{left_kernel_mod_p, rank_mod_p};

pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// How unit groups are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CountMethod {
    /// Enumerate when `|O/p^kO|` is within budget, otherwise count structurally.
    #[default]
    Auto,
    Enumerate,
    /// `#R^× = #R·∏(1 − p^{-f})` over the residue fields of `R`.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIndexReport {
    pub p: BigInt,
    pub k: u32,
    pub units_o: BigInt,
    pub units_lambda: BigInt,
    pub index: BigInt,
    pub method: CountMethod,
    pub power_index: Option<(u32, BigInt)>,
}

/// `O/p^kO` with its subring `Λ/p^kO`.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    pub p: u64,
    pub k: u32,
    pub modulus: u64,
    rank: usize,
    table: ModTable,
    residue: ModTable,
    sub: IntegerLattice,
}

impl FiniteRing {
    pub fn new(pair: &OrderPair, p: u64, k: u32) -> Result<Self> {
        let modulus = p
            .checked_pow(k)
            .filter(|&m| m < 1 << 62)
            .ok_or_else(|| Error::ModulusTooLarge {
                size: format!("{p}^{k}"),
                budget: u64::MAX,
            })?;
        let n = pair.rank();
        let mut rows = pair.sub().basis().to_rows();
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(modulus);
            rows.push(e);
        }
        Ok(FiniteRing {
            p,
            k,
            modulus,
            rank: n,
            table: pair.table().reduce(modulus),
            residue: pair.table().reduce(p),
            sub: hnf(&Matrix::from_rows(&rows)),
        })
    }

    /// `#(O/p^kO)`.
    pub fn size(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.modulus), self.rank)
    }

    /// `#(Λ/p^kO)`.
    pub fn sub_size(&self) -> BigInt {
        self.sub_ranges().iter().fold(BigInt::one(), |acc, &r| acc * r)
    }

    fn sub_ranges(&self) -> Vec<u64> {
        (0..self.rank)
            .map(|i| self.modulus / self.sub.basis()[(i, i)].to_u64().expect("divides modulus"))
            .collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.table.mul(a, b)
    }

    pub fn pow(&self, a: &[u64], e: u128) -> Vec<u64> {
        self.table.pow(a, e)
    }

    /// A residue is a unit iff it is one modulo `p`.
    pub fn is_unit(&self, x: &[u64]) -> bool {
        let reduced: Vec<u64> = x.iter().map(|c| c % self.p).collect();
        rank_mod_p(&self.residue.mult_rows(&reduced), self.p) == self.rank
    }

    pub fn in_sub(&self, x: &[u64]) -> bool {
        self.sub.contains(&x.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
    }

    /// Visits every residue of `O/p^kO`.
    pub fn for_each(&self, mut f: impl FnMut(&[u64])) {
        let mut x = vec![0u64; self.rank];
        loop {
            f(&x);
            let Some(i) = (0..self.rank).find(|&i| x[i] + 1 < self.modulus) else {
                return;
            };
            x[i] += 1;
            x[..i].iter_mut().for_each(|c| *c = 0);
        }
    }

    /// Visits every residue of `Λ/p^kO`.
    pub fn for_each_sub(&self, mut f: impl FnMut(&[u64])) {
        let ranges = self.sub_ranges();
        let basis: Vec<Vec<u64>> = self
            .sub
            .basis()
            .row_iter()
            .map(|r| r.iter().map(|c| c.mod_floor(&BigInt::from(self.modulus)).to_u64().unwrap()).collect())
            .collect();
        let mut a = vec![0u64; self.rank];
        loop {
            let mut x = vec![0u64; self.rank];
            for (aj, row) in a.iter().zip(&basis) {
                if *aj == 0 {
                    continue;
                }
                for (xi, r) in x.iter_mut().zip(row) {
                    *xi = (*xi + mul_mod(*aj, *r, self.modulus)) % self.modulus;
                }
            }
            f(&x);
            let Some(i) = (0..self.rank).find(|&i| a[i] + 1 < ranges[i]) else {
                return;
            };
            a[i] += 1;
            a[..i].iter_mut().for_each(|c| *c = 0);
        }
    }

    pub fn count_units(&self) -> BigInt {
        let mut count = 0u64;
        self.for_each(|x| count += u64::from(self.is_unit(x)));
        BigInt::from(count)
    }

    pub fn count_sub_units(&self) -> BigInt {
        let mut count = 0u64;
        self.for_each_sub(|x| count += u64::from(self.is_unit(x)));
        BigInt::from(count)
    }

    pub fn units(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        self.for_each(|x| {
            if self.is_unit(x) {
                out.push(x.to_vec());
            }
        });
        out
    }
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(0u64, |acc, (x, r)| (acc + mul_mod(*x, r[j], p)) % p))
                .collect()
        })
        .collect()
}

/// Degrees of the residue fields of a ring of rank `n` over ℤ, read off from
/// the Frobenius of its reduction mod `p`.
pub fn residue_degrees(table: &MultTable, p: u64) -> Vec<usize> {
    let red = table.reduce(p);
    let n = red.dim();
    let unit = |i: usize| {
        let mut e = vec![0u64; n];
        e[i] = 1;
        e
    };
    let frob: Vec<Vec<u64>> = (0..n).map(|i| red.pow(&unit(i), p as u128)).collect();
    let mut power = frob.clone();
    let mut q = p as u128;
    while q < n as u128 {
        power = mat_mul_mod(&power, &frob, p);
        q *= p as u128;
    }
    let radical = left_kernel_mod_p(&power, p);
    let r = radical.len();
    let reduced_dim = n - r;
    // g[j] = dim of the φ^j-fixed part of A/rad = Σ_i gcd(j, f_i)
    let mut g = vec![0usize; reduced_dim + 1];
    let mut phi_j = frob.clone();
    for (j, gj) in g.iter_mut().enumerate().skip(1) {
        if j > 1 {
            phi_j = mat_mul_mod(&phi_j, &frob, p);
        }
        let mut rows: Vec<Vec<u64>> = phi_j
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut row = row.clone();
                row[i] = (row[i] + p - 1) % p;
                row
            })
            .collect();
        rows.extend(radical.iter().cloned());
        *gj = left_kernel_mod_p(&rows, p).len() - r;
    }
    // g(j) = Σ_{d|j} φ(d)·N_d with N_d = #{i : d | f_i}
    let mut divisible = vec![0usize; reduced_dim + 1];
    for j in 1..=reduced_dim {
        let lower: usize = (1..j).filter(|d| j % d == 0).map(|d| totient(d) * divisible[d]).sum();
        divisible[j] = (g[j] - lower) / totient(j);
    }
    let mut degrees = Vec::new();
    for f in 1..=reduced_dim {
        let exact: i64 = (1..=reduced_dim / f)
            .map(|k| mobius(k) * divisible[k * f] as i64)
            .sum();
        degrees.extend(std::iter::repeat_n(f, exact as usize));
    }
    degrees
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut sign, mut d) = (n, 1i64, 2usize);
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// `size·∏(1 − p^{-f})`.
fn unit_density(size: &BigInt, p: u64, degrees: &[usize]) -> BigInt {
    degrees.iter().fold(size.clone(), |acc, &f| {
        let q = num_traits::pow(BigInt::from(p), f);
        acc / &q * (q - 1)
    })
}

/// `[O_p^× : Λ_p^×]` via `#(O/p^kO)^× / #(Λ/p^kO)^×`, `k = max(conductor, 1)`.
pub fn local_unit_index(pair: &OrderPair, p: &BigInt, method: CountMethod, budget: u64) -> Result<LocalIndexReport> {
    let k = pair.conductor_exponent(p).max(1);
    local_unit_index_at(pair, p, k, method, budget)
}

/// As [`local_unit_index`] with an explicit exponent `k ≥ conductor`.
pub fn local_unit_index_at(
    pair: &OrderPair,
    p: &BigInt,
    k: u32,
    method: CountMethod,
    budget: u64,
) -> Result<LocalIndexReport> {
    let p64 = to_u64(p)?;
    let ring = FiniteRing::new(pair, p64, k)?;
    let within = ring.size() <= BigInt::from(budget);
    let used = match method {
        CountMethod::Auto if within => CountMethod::Enumerate,
        CountMethod::Auto => CountMethod::Structural,
        CountMethod::Enumerate if !within => {
            return Err(Error::ModulusTooLarge {
                size: ring.size().to_string(),
                budget,
            })
        }
        m => m,
    };
    let (units_o, units_lambda) = if used == CountMethod::Enumerate {
        (ring.count_units(), ring.count_sub_units())
    } else {
        let uo = unit_density(&ring.size(), p64, &residue_degrees(pair.table(), p64));
        let ul = unit_density(&ring.sub_size(), p64, &residue_degrees(&pair.sub_table(), p64));
        (uo, ul)
    };
    let (index, rem) = units_o.div_rem(&units_lambda);
    assert!(rem.is_zero(), "unit group of Λ/p^kO divides that of O/p^kO");
    Ok(LocalIndexReport {
        p: p.clone(),
        k,
        units_o,
        units_lambda,
        index,
        method: used,
        power_index: None,
    })
}

/// `[Θ : Θ ∩ Λ_p^×]` for `Θ` the `h`-th powers of `(O/p^kO)^×`.
pub fn power_index(pair: &OrderPair, p: &BigInt, h: u32, budget: u64) -> Result<BigInt> {
    if h == 0 {
        return Err(Error::InvalidInput("power index needs h ≥ 1".into()));
    }
    let k = pair.conductor_exponent(p).max(1);
    let ring = FiniteRing::new(pair, to_u64(p)?, k)?;
    if ring.size() > BigInt::from(budget) {
        return Err(Error::ModulusTooLarge {
            size: ring.size().to_string(),
            budget,
        });
    }
    let powers: HashSet<Vec<u64>> = ring.units().iter().map(|u| ring.pow(u, h as u128)).collect();
    let inside = powers.iter().filter(|x| ring.in_sub(x)).count();
    Ok(BigInt::from(powers.len() / inside))
}

/// Product of the local indices over the primes dividing `[O:Λ]`.
pub fn global_index(pair: &OrderPair, method: CountMethod, budget: u64) -> Result<(BigInt, Vec<LocalIndexReport>)> {
    let reports = prime_divisors(&pair.index())
        .iter()
        .map(|p| local_unit_index(pair, p, method, budget))
        .collect::<Result<Vec<_>>>()?;
    let total = reports.iter().fold(BigInt::one(), |acc, r| acc * &r.index);
    Ok((total, reports))
}
