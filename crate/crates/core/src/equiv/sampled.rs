use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// A numerical function known on finitely many labelled samples, with
/// exact rational values `≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledFunction {
    labels: Vec<String>,
    values: Vec<BigRational>,
}

impl SampledFunction {
    pub fn new(labels: Vec<String>, values: Vec<BigRational>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidInput("sampled function has no samples".into()));
        }
        if labels.len() != values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} values",
                labels.len(),
                values.len()
            )));
        }
        let one = BigRational::one();
        if let Some(i) = values.iter().position(|v| *v < one) {
            return Err(Error::InvalidInput(format!(
                "value at sample {} is below 1",
                labels[i]
            )));
        }
        Ok(SampledFunction { labels, values })
    }

    /// Integer-valued function with labels given by `Display`.
    pub fn from_integers<L: ToString>(
        samples: impl IntoIterator<Item = (L, BigInt)>,
    ) -> Result<Self> {
        let (labels, values) = samples
            .into_iter()
            .map(|(l, v)| (l.to_string(), BigRational::from_integer(v)))
            .unzip();
        Self::new(labels, values)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check_matched(&self, other: &Self) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::InvalidInput("sample labels differ".into()));
        }
        Ok(())
    }

    /// Pointwise product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_matched(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(SampledFunction { labels: self.labels.clone(), values })
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Self) -> Result<Self> {
        self.check_matched(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
            .collect();
        Ok(SampledFunction { labels: self.labels.clone(), values })
    }

    /// Keeps the samples whose index satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Option<Self> {
        let (labels, values): (Vec<_>, Vec<_>) = self
            .labels
            .iter()
            .zip(&self.values)
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, (l, v))| (l.clone(), v.clone()))
            .unzip();
        if labels.is_empty() {
            None
        } else {
            Some(SampledFunction { labels, values })
        }
    }
}
