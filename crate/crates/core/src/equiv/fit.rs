use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::sampled::SampledFunction;
use super::witness::{bound_holds, ceil_root_on_grid, Direction, DominationWitness};
use crate::error::{Error, Result};
use crate::ratlin::arith::{ln_rat, rat_to_f64};

/// Largest exponent denominator produced by the fit.
pub const EXPONENT_DENOMINATOR: i64 = 1000;
/// Grid on which fitted constants are rounded up.
pub const CONSTANT_DENOMINATOR: i64 = 1_000_000;
/// Objective values closer than this count as ties.
pub const OBJECTIVE_TOLERANCE: f64 = 1e-3;

/// Smallest constant on the `1/CONSTANT_DENOMINATOR` grid, and at least 1,
/// with `f_i ≤ c·g_i^a` on every sample.
pub fn minimal_constant(f: &SampledFunction, g: &SampledFunction, a: &BigRational) -> BigRational {
    if let Some(c) = guessed_constant(f, g, a) {
        return c;
    }
    let den = BigInt::from(CONSTANT_DENOMINATOR);
    let one = BigRational::one();
    let p = a.numer().to_u32().expect("exponent fits u32");
    let q = a.denom().to_u32().expect("denominator fits u32");
    let mut best = one.clone();
    for (x, y) in f.values().iter().zip(g.values()) {
        if bound_holds(x, y, a, &best) {
            continue;
        }
        let ratio = BigRational::new(
            x.numer().pow(q) * y.denom().pow(p),
            x.denom().pow(q) * y.numer().pow(p),
        );
        let c = ceil_root_on_grid(&ratio, q, &den);
        if c > best {
            best = c;
        }
    }
    best
}

/// Float estimate of the minimal constant, accepted only if it verifies
/// exactly and its predecessor on the grid does not.
fn guessed_constant(f: &SampledFunction, g: &SampledFunction, a: &BigRational) -> Option<BigRational> {
    let af = rat_to_f64(a);
    let log_c = f
        .values()
        .iter()
        .zip(g.values())
        .map(|(x, y)| ln_rat(x) - af * ln_rat(y))
        .fold(0.0f64, f64::max);
    let scaled = (log_c.exp() * CONSTANT_DENOMINATOR as f64).ceil();
    if !scaled.is_finite() || scaled > 1e15 {
        return None;
    }
    let n = (scaled as i64).max(CONSTANT_DENOMINATOR);
    let c = BigRational::new(n.into(), CONSTANT_DENOMINATOR.into());
    let holds = |c: &BigRational| {
        f.values()
            .iter()
            .zip(g.values())
            .all(|(x, y)| bound_holds(x, y, a, c))
    };
    if !holds(&c) {
        return None;
    }
    if n == CONSTANT_DENOMINATOR {
        return Some(c);
    }
    let prev = BigRational::new((n - 1).into(), CONSTANT_DENOMINATOR.into());
    if holds(&prev) {
        return None;
    }
    Some(c)
}

fn objective(a: &BigRational, c: &BigRational) -> f64 {
    rat_to_f64(a) + ln_rat(c)
}

/// Simplest fraction in the closed interval `[lo, hi]`, `0 ≤ lo ≤ hi`.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() {
        return fl + BigRational::one();
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

fn float_to_rational(x: f64) -> BigRational {
    let scale = 1u64 << 40;
    BigRational::new(BigInt::from((x * scale as f64).round() as i128), BigInt::from(scale))
}

/// Minimizes `a + ln c` subject to `log f_i ≤ a·log g_i + log c`, `a ≥ 0`,
/// `c ≥ 1` and `a ≤ a_max` when given. Returns the optimal `a` as a float.
fn lp_optimum(lf: &[f64], lg: &[f64], a_max: Option<f64>) -> f64 {
    let hi = a_max.unwrap_or(f64::INFINITY);
    let value = |a: f64| {
        let slack = lf
            .iter()
            .zip(lg)
            .map(|(x, y)| x - a * y)
            .fold(0.0f64, f64::max);
        a + slack
    };
    let mut cands = vec![0.0];
    if hi.is_finite() {
        cands.push(hi);
    }
    for i in 0..lf.len() {
        if lg[i] > 0.0 {
            cands.push(lf[i] / lg[i]);
        }
        for j in i + 1..lf.len() {
            let dy = lg[i] - lg[j];
            if dy.abs() > 1e-12 {
                cands.push((lf[i] - lf[j]) / dy);
            }
        }
    }
    cands.retain(|a| a.is_finite() && *a >= 0.0 && *a <= hi);
    cands.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    cands.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let mut best = (f64::INFINITY, 0.0);
    for a in cands {
        let v = value(a);
        if v < best.0 - 1e-12 {
            best = (v, a);
        }
    }
    best.1
}

fn fit_bounded(
    f: &SampledFunction,
    g: &SampledFunction,
    a_max: Option<&BigRational>,
    direction: Direction,
) -> Result<DominationWitness> {
    f.check_matched(g)?;
    let one = BigRational::one();
    if g.values().iter().all(|v| *v == one) {
        if f.values().iter().any(|v| *v > one) {
            return Err(Error::AllOnes);
        }
        return DominationWitness::new(BigRational::zero(), one, direction);
    }
    let lf: Vec<f64> = f.values().iter().map(ln_rat).collect();
    let lg: Vec<f64> = g.values().iter().map(ln_rat).collect();
    let a_star = lp_optimum(&lf, &lg, a_max.map(rat_to_f64));

    let den = BigInt::from(EXPONENT_DENOMINATOR);
    let scaled = a_star * EXPONENT_DENOMINATOR as f64;
    let half_step = 0.5 / EXPONENT_DENOMINATOR as f64;
    let mut cands = vec![
        simplest_between(
            &float_to_rational((a_star - half_step).max(0.0)),
            &float_to_rational(a_star + half_step),
        ),
        BigRational::new(BigInt::from(scaled.floor() as i64), den.clone()),
        BigRational::new(BigInt::from(scaled.ceil() as i64), den),
        BigRational::zero(),
    ];
    if let Some(m) = a_max {
        for c in cands.iter_mut() {
            if &*c > m {
                *c = m.clone();
            }
        }
    }
    cands.sort();
    cands.dedup();
    let scored: Vec<(f64, BigRational, BigRational)> = cands
        .into_iter()
        .map(|a| {
            let c = minimal_constant(f, g, &a);
            (objective(&a, &c), a, c)
        })
        .collect();
    let best = scored.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    // within the exponent resolution, the simplest fraction wins
    let (_, a, c) = scored
        .into_iter()
        .filter(|s| s.0 <= best + OBJECTIVE_TOLERANCE)
        .min_by(|x, y| x.1.denom().cmp(y.1.denom()).then(x.1.cmp(&y.1)))
        .expect("at least one candidate");
    let w = DominationWitness::new(a, c, direction)?;
    w.verify(f, g)?;
    Ok(w)
}

/// Fits `f ≼ g` on the sample: the exponent `a` (denominator at most 1000)
/// and constant `c` (rounded up to a millionth) minimizing `a + ln c`,
/// verified exactly before return. Samples with `g_i = 1` stay as
/// constraints `c ≥ f_i`.
pub fn fit_domination(f: &SampledFunction, g: &SampledFunction) -> Result<DominationWitness> {
    fit_bounded(f, g, None, Direction::Forward)
}

/// Upper limits on admissible witnesses in an equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivCaps {
    pub a_max: BigRational,
    pub c_max: BigRational,
}

impl Default for EquivCaps {
    fn default() -> Self {
        EquivCaps {
            a_max: BigRational::from_integer(4.into()),
            c_max: BigRational::from_integer(16.into()),
        }
    }
}

/// Sample at which no witness within the caps exists, with the log of
/// `lhs_i / (c_max·rhs_i^a_max)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FailureCertificate {
    pub index: usize,
    pub label: String,
    pub log_excess: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Domination {
    Witness(DominationWitness),
    Failure(FailureCertificate),
}

impl Domination {
    pub fn witness(&self) -> Option<&DominationWitness> {
        match self {
            Domination::Witness(w) => Some(w),
            Domination::Failure(_) => None,
        }
    }
}

/// Both directions of a sampled equivalence check.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivReport {
    /// `f ≼ g`
    pub forward: Domination,
    /// `g ≼ f`
    pub backward: Domination,
    pub caps: EquivCaps,
    pub samples: usize,
}

impl EquivReport {
    pub fn equivalent(&self) -> bool {
        self.forward.witness().is_some() && self.backward.witness().is_some()
    }

    /// Witnesses are extremal over the finite sample only.
    pub const SCOPE_NOTE: &'static str = "exponents are minimal over the finite sample";
}

fn dominate_within(
    lhs: &SampledFunction,
    rhs: &SampledFunction,
    caps: &EquivCaps,
    direction: Direction,
) -> Result<Domination> {
    let w = match fit_bounded(lhs, rhs, Some(&caps.a_max), direction) {
        Ok(w) => w,
        Err(Error::AllOnes) => return Ok(Domination::Failure(worst_sample(lhs, rhs, caps))),
        Err(e) => return Err(e),
    };
    if w.constant <= caps.c_max {
        return Ok(Domination::Witness(w));
    }
    let capped = DominationWitness::new(caps.a_max.clone(), caps.c_max.clone(), direction)?;
    if capped.verify(lhs, rhs).is_err() {
        return Ok(Domination::Failure(worst_sample(lhs, rhs, caps)));
    }
    // least grid exponent whose constant fits under c_max
    let den = BigInt::from(EXPONENT_DENOMINATOR);
    let top = (&caps.a_max * BigRational::from_integer(den.clone()))
        .ceil()
        .to_integer()
        .to_i64()
        .expect("cap fits i64");
    let fits = |k: i64| {
        let a = BigRational::new(k.into(), den.clone());
        lhs.values()
            .iter()
            .zip(rhs.values())
            .all(|(x, y)| bound_holds(x, y, &a, &caps.c_max))
    };
    let (mut lo, mut hi) = (0i64, top);
    if fits(0) {
        hi = 0;
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let a = BigRational::new(hi.into(), den).min(caps.a_max.clone());
    let c = minimal_constant(lhs, rhs, &a);
    let w = DominationWitness::new(a, c, direction)?;
    w.verify(lhs, rhs)?;
    Ok(Domination::Witness(w))
}

fn worst_sample(lhs: &SampledFunction, rhs: &SampledFunction, caps: &EquivCaps) -> FailureCertificate {
    let a = rat_to_f64(&caps.a_max);
    let lc = ln_rat(&caps.c_max);
    let (index, log_excess) = lhs
        .values()
        .iter()
        .zip(rhs.values())
        .map(|(x, y)| ln_rat(x) - a * ln_rat(y) - lc)
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, v)| if v >= best.1 { (i, v) } else { best });
    FailureCertificate { index, label: lhs.labels()[index].clone(), log_excess }
}

/// Checks `f ≈ g` on the sample within the default caps `a ≤ 4`, `c ≤ 16`.
pub fn check_equivalence(f: &SampledFunction, g: &SampledFunction) -> Result<EquivReport> {
    check_equivalence_with(f, g, &EquivCaps::default())
}

pub fn check_equivalence_with(
    f: &SampledFunction,
    g: &SampledFunction,
    caps: &EquivCaps,
) -> Result<EquivReport> {
    f.check_matched(g)?;
    Ok(EquivReport {
        forward: dominate_within(f, g, caps, Direction::Forward)?,
        backward: dominate_within(g, f, caps, Direction::Backward)?,
        caps: caps.clone(),
        samples: f.len(),
    })
}

/// The bracket `max(f, g) ≤ f·g ≤ max(f, g)²`, valid since all values are
/// at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBracket {
    pub max: SampledFunction,
    pub product: SampledFunction,
    pub max_below_product: DominationWitness,
    pub product_below_max_squared: DominationWitness,
}

pub fn max_product_bracket(f: &SampledFunction, g: &SampledFunction) -> Result<ProductBracket> {
    let max = f.max(g)?;
    let product = f.product(g)?;
    let one = BigRational::one();
    let lower = DominationWitness::forward(one.clone(), one.clone())?;
    let upper = DominationWitness::new(BigRational::from_integer(2.into()), one, Direction::Backward)?;
    lower.verify(&max, &product)?;
    upper.verify(&product, &max)?;
    Ok(ProductBracket {
        max,
        product,
        max_below_product: lower,
        product_below_max_squared: upper,
    })
}
