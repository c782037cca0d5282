//! Serializable report records and their JSON / CSV renderings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::config::{parse_rational, SCHEMA};
use crate::error::{CliError, CliResult};

pub fn int_str(n: &BigInt) -> String {
    n.to_string()
}

/// Rationals are always written `p/q` in lowest terms.
pub fn rat_str(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport<T: Serialize> {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub budget: u64,
    pub results: T,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(command: &str, seed: u64, budget: u64, results: T) -> Self {
        RunReport { schema: SCHEMA, command: command.to_string(), seed, budget, results }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A CSV row type with a fixed header.
pub trait CsvRecord: Serialize + for<'de> Deserialize<'de> {
    const HEADER: &'static [&'static str];
}

pub fn write_csv<T: CsvRecord>(rows: &[T]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(T::HEADER).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn read_csv<T: CsvRecord>(text: &str) -> CliResult<Vec<T>> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header: Vec<String> = r
        .headers()
        .map_err(|e| CliError::config(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    if header != T::HEADER {
        return Err(CliError::config(format!("unexpected CSV header {header:?}")));
    }
    r.deserialize()
        .map(|row| row.map_err(|e| CliError::config(e.to_string())))
        .collect()
}

fn check_int(s: &str) -> CliResult<()> {
    s.parse::<BigInt>()
        .map(|_| ())
        .map_err(|_| CliError::config(format!("not an integer: {s:?}")))
}

fn check_rat(s: &str) -> CliResult<()> {
    let q = parse_rational(s)?;
    if rat_str(&q) != s {
        return Err(CliError::config(format!("rational not in canonical p/q form: {s:?}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRow {
    pub m: u64,
    pub delta: String,
    pub disc: String,
    pub ratio: String,
}

impl CsvRecord for EquivalenceRow {
    const HEADER: &'static [&'static str] = &["m", "delta", "disc", "ratio"];
}

impl EquivalenceRow {
    pub fn validate(&self) -> CliResult<()> {
        check_int(&self.delta)?;
        check_int(&self.disc)?;
        check_rat(&self.ratio)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EyextCsvRow {
    pub p: String,
    pub index: String,
    pub p_over_index: String,
}

impl CsvRecord for EyextCsvRow {
    const HEADER: &'static [&'static str] = &["p", "index", "p_over_index"];
}

impl EyextCsvRow {
    pub fn validate(&self) -> CliResult<()> {
        check_int(&self.p)?;
        check_int(&self.index)?;
        check_rat(&self.p_over_index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaCsvRow {
    pub label: String,
    pub m: Option<u64>,
    pub delta: String,
    pub disc: String,
    pub order_index: String,
    pub etale_disc: String,
}

impl CsvRecord for DeltaCsvRow {
    const HEADER: &'static [&'static str] = &["label", "m", "delta", "disc", "order_index", "etale_disc"];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscCsvRow {
    pub label: String,
    pub m: Option<u64>,
    pub disc: String,
    pub d: String,
    pub d_mode: String,
    pub global_index: String,
}

impl CsvRecord for DiscCsvRow {
    const HEADER: &'static [&'static str] = &["label", "m", "disc", "d", "d_mode", "global_index"];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCsvRow {
    pub class: usize,
    pub rank: usize,
    /// Space-separated subgroup class labels.
    pub witnesses: String,
    /// Basis rows separated by `;`, entries by spaces.
    pub basis: String,
}

impl CsvRecord for ClassCsvRow {
    const HEADER: &'static [&'static str] = &["class", "rank", "witnesses", "basis"];
}
