//! The discriminant `disc_K(T) = d·[T_max : T(𝔸_f) ∩ K]` with `K = GL(n, ℤ̂)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::order::OrderPair;
use super::units::{global_index, CountMethod, LocalIndexReport};
use crate::error::Result;
use crate::numfield::{exact_splitting_disc, NumberField};
use crate::torus::EmbeddedTorus;

/// Which discriminant stands in for the splitting field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SplittingMode {
    /// Exact `d_L` when the splitting field is detectable, else `d_E`.
    #[default]
    Auto,
    /// Always `d_E`.
    Etale,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplittingDisc {
    Exact,
    EtaleSubstitute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscReport {
    pub etale_disc: BigInt,
    pub d: BigInt,
    pub d_mode: SplittingDisc,
    pub global_index: BigInt,
    pub disc_value: BigInt,
    pub delta: BigInt,
    pub order_index: BigInt,
    pub locals: Vec<LocalIndexReport>,
}

/// `|d_L|` when every non-rational factor is the same Galois field.
fn splitting_disc(fields: &[&NumberField]) -> Option<BigInt> {
    let nontrivial: Vec<&&NumberField> = fields.iter().filter(|k| k.degree() > 1).collect();
    let Some(first) = nontrivial.first() else {
        return Some(BigInt::one());
    };
    let same = nontrivial.iter().all(|k| {
        k.defining_poly() == first.defining_poly()
            || (k.degree() == 2 && first.degree() == 2 && k.field_disc() == first.field_disc())
    });
    if same {
        exact_splitting_disc(first)
    } else {
        None
    }
}

pub fn disc_k(t: &EmbeddedTorus, mode: SplittingMode, method: CountMethod, budget: u64) -> Result<DiscReport> {
    let pair = OrderPair::from_torus(t);
    let (index, locals) = global_index(&pair, method, budget)?;
    let etale_disc = t.etale_disc();
    let fields: Vec<&NumberField> = t.etale().factors().iter().map(|(k, _)| k).collect();
    let exact = match mode {
        SplittingMode::Auto => splitting_disc(&fields),
        SplittingMode::Etale => None,
    };
    let (d, d_mode) = match exact {
        Some(d) => (d, SplittingDisc::Exact),
        None => (etale_disc.clone(), SplittingDisc::EtaleSubstitute),
    };
    Ok(DiscReport {
        disc_value: &d * &index,
        etale_disc,
        d,
        d_mode,
        global_index: index,
        delta: t.delta(),
        order_index: t.order_index().clone(),
        locals,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EyextRow {
    pub p: BigInt,
    pub index: BigInt,
    /// `p / index`.
    pub p_over_index: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EyextReport {
    pub rows: Vec<EyextRow>,
    /// Least `c` with `index ≥ p/c` on every nontrivial row.
    pub min_c: Option<BigRational>,
}

/// Local indices over a family of `(Λ ⊆ O, p)` cases, keeping the nontrivial ones.
pub fn eyext_scan(family: &[(OrderPair, BigInt)], method: CountMethod, budget: u64) -> Result<EyextReport> {
    let mut rows = Vec::new();
    for (pair, p) in family {
        let r = super::units::local_unit_index(pair, p, method, budget)?;
        if r.index.is_one() {
            continue;
        }
        rows.push(EyextRow {
            p: p.clone(),
            p_over_index: BigRational::new(p.clone(), r.index.clone()),
            index: r.index,
        });
    }
    let min_c = rows.iter().map(|r| r.p_over_index.clone()).max();
    Ok(EyextReport { rows, min_c })
}
