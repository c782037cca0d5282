//! JSON configuration, schema `torusdisc/1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Deserialize;
use torusdisc::numfield::NumberField;
use torusdisc::ratlin::{IntPolynomial, RatMatrix};
use torusdisc::torus::{conductor_conjugator, EmbeddedTorus, RegularBasis};

use crate::error::{CliError, CliResult};
use crate::family::unimodular_random;

pub const SCHEMA: &str = "torusdisc/1";

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub schema: String,
    #[serde(default)]
    pub tori: Vec<TorusConfig>,
    #[serde(default)]
    pub eyext: Option<EyextConfig>,
    #[serde(default)]
    pub bands: Option<BandsConfig>,
}

/// An integer, or a rational written `"p/q"` or `"p"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

pub type MatrixConfig = Vec<Vec<Number>>;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorConfig {
    pub poly: Vec<Number>,
    #[serde(default = "one_usize")]
    pub multiplicity: usize,
}

fn one_usize() -> usize {
    1
}

fn one_u32() -> u32 {
    1
}

fn two_u64() -> u64 {
    2
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Embedding {
    /// `"regular"` (integral basis) or `"power"` (power basis).
    Named(String),
    Explicit { generators: Vec<MatrixConfig> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusConfig {
    pub label: String,
    pub n: usize,
    #[serde(default)]
    pub algebra: Option<Vec<FactorConfig>>,
    #[serde(default)]
    pub embedding: Option<Embedding>,
    #[serde(default)]
    pub generators: Option<Vec<MatrixConfig>>,
    #[serde(default)]
    pub conjugator: Option<MatrixConfig>,
    #[serde(default)]
    pub conjugator_family: Option<FamilyConfig>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyConfig {
    /// `diag(1, m, …, m)` for `m_from ≤ m ≤ m_to`.
    DiagonalDenominator { m_from: u64, m_to: u64 },
    /// `count` random unimodular matrices with elementary entries in `[-entry_bound, entry_bound]`.
    UnimodularRandom { count: usize, entry_bound: i64 },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EyextConfig {
    /// Defining polynomial of the field.
    pub field: Vec<Number>,
    #[serde(default = "two_u64")]
    pub p_min: u64,
    pub p_max: u64,
    /// Orders `ℤ + p^e·O` at each prime `p`.
    #[serde(default = "one_u32")]
    pub conductor_exponent: u32,
}

/// Acceptance bands for the equivalence check of `verify-thm51`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandsConfig {
    pub forward_a_max: Number,
    pub backward_a_max: Number,
    pub c_max: Number,
}

pub fn parse_config(text: &str) -> CliResult<Config> {
    let cfg: Config = serde_json::from_str(text).map_err(|e| CliError::config(e.to_string()))?;
    if cfg.schema != SCHEMA {
        return Err(CliError::config(format!(
            "unsupported schema {:?}, expected {SCHEMA:?}",
            cfg.schema
        )));
    }
    Ok(cfg)
}

pub fn parse_rational(s: &str) -> CliResult<BigRational> {
    let bad = || CliError::config(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl Number {
    pub fn to_rational(&self) -> CliResult<BigRational> {
        match self {
            Number::Int(i) => Ok(BigRational::from_integer((*i).into())),
            Number::Text(s) => parse_rational(s),
        }
    }

    pub fn to_integer(&self) -> CliResult<BigInt> {
        let q = self.to_rational()?;
        if !q.is_integer() {
            return Err(CliError::config(format!("expected an integer, got {q}")));
        }
        Ok(q.to_integer())
    }
}

pub fn parse_matrix(m: &MatrixConfig, n: usize, what: &str) -> CliResult<RatMatrix> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(CliError::config(format!("{what}: expected a {n}x{n} matrix")));
    }
    let rows = m
        .iter()
        .map(|r| r.iter().map(Number::to_rational).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    Ok(RatMatrix::from_rows(&rows))
}

pub fn parse_poly(c: &[Number]) -> CliResult<IntPolynomial> {
    let coeffs = c.iter().map(Number::to_integer).collect::<CliResult<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

/// One torus of a (possibly one-element) family.
#[derive(Debug, Clone)]
pub struct Member {
    pub item: usize,
    pub index: usize,
    pub label: String,
    /// Family parameter of the diagonal-denominator family.
    pub m: Option<u64>,
    pub conjugator: Option<RatMatrix>,
}

impl Member {
    /// `m` when present, else the 1-based member index.
    pub fn parameter(&self) -> u64 {
        self.m.unwrap_or(self.index as u64 + 1)
    }
}

/// Expands every item into its members, in configuration order.
pub fn expand_members(cfg: &Config, seed: u64) -> CliResult<Vec<Member>> {
    let mut out = Vec::new();
    for (item, t) in cfg.tori.iter().enumerate() {
        if t.conjugator.is_some() && t.conjugator_family.is_some() {
            return Err(CliError::config(format!(
                "{}: conjugator and conjugator_family are exclusive",
                t.label
            )));
        }
        let base = t
            .conjugator
            .as_ref()
            .map(|c| parse_matrix(c, t.n, &t.label))
            .transpose()?;
        match &t.conjugator_family {
            None => out.push(Member {
                item,
                index: 0,
                label: t.label.clone(),
                m: None,
                conjugator: base,
            }),
            Some(FamilyConfig::DiagonalDenominator { m_from, m_to }) => {
                if *m_from < 1 || m_from > m_to {
                    return Err(CliError::config(format!("{}: empty or invalid m range", t.label)));
                }
                for (index, m) in (*m_from..=*m_to).enumerate() {
                    let mi = m.to_i64().ok_or_else(|| CliError::config("m out of range"))?;
                    out.push(Member {
                        item,
                        index,
                        label: format!("{}[m={m}]", t.label),
                        m: Some(m),
                        conjugator: Some(conductor_conjugator(t.n, mi)),
                    });
                }
            }
            Some(FamilyConfig::UnimodularRandom { count, entry_bound }) => {
                if *entry_bound < 1 {
                    return Err(CliError::config(format!("{}: entry_bound must be positive", t.label)));
                }
                for index in 0..*count {
                    out.push(Member {
                        item,
                        index,
                        label: format!("{}[#{}]", t.label, index + 1),
                        m: None,
                        conjugator: Some(unimodular_random(t.n, seed, item, index, *entry_bound)),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn build_fields(label: &str, algebra: &[FactorConfig]) -> CliResult<Vec<(NumberField, usize)>> {
    algebra
        .iter()
        .map(|f| {
            let poly = parse_poly(&f.poly)?;
            let k = NumberField::new(&poly).map_err(|e| CliError::core(label, e))?;
            Ok((k, f.multiplicity))
        })
        .collect()
}

/// The unconjugated torus of an item.
pub fn build_base_torus(t: &TorusConfig) -> CliResult<EmbeddedTorus> {
    let parse_gens = |gens: &[MatrixConfig]| -> CliResult<Vec<RatMatrix>> {
        if gens.is_empty() {
            return Err(CliError::config(format!("{}: no generators", t.label)));
        }
        gens.iter().map(|g| parse_matrix(g, t.n, &t.label)).collect()
    };
    let torus = match (&t.algebra, &t.embedding, &t.generators) {
        (None, None, Some(gens)) => {
            EmbeddedTorus::new(parse_gens(gens)?).map_err(|e| CliError::core(&t.label, e))?
        }
        (Some(alg), Some(Embedding::Named(name)), None) => {
            let basis = match name.as_str() {
                "regular" => RegularBasis::Integral,
                "power" => RegularBasis::Power,
                other => return Err(CliError::config(format!("{}: unknown embedding {other:?}", t.label))),
            };
            let fields = build_fields(&t.label, alg)?;
            EmbeddedTorus::regular(&fields, basis).map_err(|e| CliError::core(&t.label, e))?
        }
        (Some(alg), Some(Embedding::Explicit { generators }), None) => {
            let fields = build_fields(&t.label, alg)?;
            let torus =
                EmbeddedTorus::new(parse_gens(generators)?).map_err(|e| CliError::core(&t.label, e))?;
            let declared_dim: usize = fields.iter().map(|(k, m)| k.degree() * m).sum();
            let declared_disc: BigInt = fields
                .iter()
                .map(|(k, m)| k.abs_disc().pow(*m as u32))
                .product();
            if torus.dimension() != declared_dim || torus.etale_disc() != declared_disc {
                return Err(CliError::config(format!(
                    "{}: generators do not span the declared algebra",
                    t.label
                )));
            }
            torus
        }
        _ => {
            return Err(CliError::config(format!(
                "{}: give either generators, or algebra with embedding",
                t.label
            )))
        }
    };
    if torus.ambient_n() != t.n {
        return Err(CliError::config(format!(
            "{}: declared n = {} but the torus lives in GL({})",
            t.label,
            t.n,
            torus.ambient_n()
        )));
    }
    Ok(torus)
}
