use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sampled::SampledFunction;
use crate::error::{Error, Result};

/// Which of the two compared functions is bounded by the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `first ≼ second`
    Forward,
    /// `second ≼ first`
    Backward,
}

/// The data `(a, c)` of a bound `lhs ≤ c·rhs^a` on every sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationWitness {
    pub exponent: BigRational,
    pub constant: BigRational,
    pub direction: Direction,
}

/// `x ≤ c·y^a` for `x, y, c ≥ 1` and `a = p/q ≥ 0`, decided by comparing
/// `(x/c)^q` with `y^p`.
pub fn bound_holds(x: &BigRational, y: &BigRational, a: &BigRational, c: &BigRational) -> bool {
    let lhs = x / c;
    if lhs <= BigRational::one() {
        return true;
    }
    if a.is_zero() {
        return false;
    }
    let lo = a.floor().to_integer().to_u32().expect("exponent fits u32");
    if !rat_pow_lt(y, lo, &lhs, 1) {
        return true;
    }
    let hi = a.ceil().to_integer().to_u32().expect("exponent fits u32");
    if rat_pow_lt(y, hi, &lhs, 1) {
        return false;
    }
    for grid in GRIDS {
        if a.denom() <= &BigInt::from(grid) {
            break;
        }
        let scaled = a * BigRational::from_integer(grid.into());
        let below = BigRational::new(scaled.floor().to_integer(), grid.into());
        if power_bound(&lhs, y, &below) {
            return true;
        }
        let above = BigRational::new(scaled.ceil().to_integer(), grid.into());
        if !power_bound(&lhs, y, &above) {
            return false;
        }
    }
    power_bound(&lhs, y, a)
}

/// Exponent grids tried before comparing exact powers.
const GRIDS: [i64; 3] = [1_000, 10_000, 100_000];

/// `lhs ≤ y^a` by comparing `lhs^q` with `y^p`.
fn power_bound(lhs: &BigRational, y: &BigRational, a: &BigRational) -> bool {
    let p = a.numer().to_u32().expect("exponent numerator fits u32");
    let q = a.denom().to_u32().expect("exponent denominator fits u32");
    !rat_pow_lt(y, p, lhs, q)
}

/// `u^m < v^k` for positive rationals, by cross-multiplied integer powers.
fn rat_pow_lt(u: &BigRational, m: u32, v: &BigRational, k: u32) -> bool {
    let left = u.numer().pow(m) * v.denom().pow(k);
    let right = v.numer().pow(k) * u.denom().pow(m);
    left < right
}

impl DominationWitness {
    pub fn new(exponent: BigRational, constant: BigRational, direction: Direction) -> Result<Self> {
        if exponent.is_negative() {
            return Err(Error::InvalidInput("negative exponent".into()));
        }
        if constant < BigRational::one() {
            return Err(Error::InvalidInput("constant below 1".into()));
        }
        Ok(DominationWitness { exponent, constant, direction })
    }

    pub fn forward(exponent: BigRational, constant: BigRational) -> Result<Self> {
        Self::new(exponent, constant, Direction::Forward)
    }

    /// Checks `lhs_i ≤ c·rhs_i^a` exactly on every sample.
    pub fn verify(&self, lhs: &SampledFunction, rhs: &SampledFunction) -> Result<()> {
        lhs.check_matched(rhs)?;
        for (i, (x, y)) in lhs.values().iter().zip(rhs.values()).enumerate() {
            if !bound_holds(x, y, &self.exponent, &self.constant) {
                return Err(Error::InvalidWitness(i));
            }
        }
        Ok(())
    }

    pub fn exponent_f64(&self) -> f64 {
        crate::ratlin::arith::rat_to_f64(&self.exponent)
    }

    pub fn constant_f64(&self) -> f64 {
        crate::ratlin::arith::rat_to_f64(&self.constant)
    }
}

/// `c^e` for `c ≥ 1`, rounded up to `c^⌈e⌉` when `e` is not an integer.
fn constant_power(c: &BigRational, e: &BigRational) -> BigRational {
    let k = e.ceil().to_integer();
    let k = k.to_usize().expect("exponent fits usize");
    num_traits::pow(c.clone(), k)
}

/// Exponent and constant of `g·h ≼ f` from `h ≼ f·g` with `(a₁, c₁)` and
/// `g ≼ f` with `(a₂, c₂)`: `a₃ = a₂ + a₁ + a₁a₂`, `c₃ = c₁·c₂^(1+a₁)`.
pub fn combine_dichotomy_data(
    w1: &DominationWitness,
    w2: &DominationWitness,
) -> (BigRational, BigRational) {
    let (a1, c1) = (&w1.exponent, &w1.constant);
    let (a2, c2) = (&w2.exponent, &w2.constant);
    let a3 = a2 + a1 + a1 * a2;
    let c3 = c1 * constant_power(c2, &(BigRational::one() + a1));
    (a3, c3)
}

/// Derives and verifies `g·h ≼ f` from verified witnesses `w1: h ≼ f·g` and
/// `w2: g ≼ f`.
pub fn dichotomy_combine(
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    w1: &DominationWitness,
    w2: &DominationWitness,
) -> Result<DominationWitness> {
    let fg = f.product(g)?;
    w1.verify(h, &fg)?;
    w2.verify(g, f)?;
    let (a3, c3) = combine_dichotomy_data(w1, w2);
    let out = DominationWitness::forward(a3, c3)?;
    out.verify(&g.product(h)?, f)?;
    Ok(out)
}

/// Chains `f ≼ g` with `(a₁, c₁)` and `g ≼ h` with `(a₂, c₂)` into `f ≼ h`
/// with exponent `a₁a₂` and constant `c₁·c₂^a₁` (rounded up).
pub fn compose(w_fg: &DominationWitness, w_gh: &DominationWitness) -> DominationWitness {
    DominationWitness {
        exponent: &w_fg.exponent * &w_gh.exponent,
        constant: &w_fg.constant * constant_power(&w_gh.constant, &w_fg.exponent),
        direction: Direction::Forward,
    }
}

/// Smallest `N / den` with `(N/den)^q ≥ x`, for rational `x > 0`.
pub(crate) fn ceil_root_on_grid(x: &BigRational, q: u32, den: &BigInt) -> BigRational {
    let scaled = x.numer() * den.pow(q);
    let m = scaled.div_ceil(x.denom());
    let n = crate::ratlin::arith::ceil_root(&m, q);
    BigRational::new(n, den.clone())
}
