//! The subcommands. Each returns a typed report; rendering lives in [`render`].

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use torusdisc::adelic::{disc_k, eyext_scan, CountMethod, OrderPair, SplittingDisc, SplittingMode, DEFAULT_BUDGET};
use torusdisc::atlas::enumerate_fixed_lattice_classes;
use torusdisc::equiv::{check_equivalence_with, Domination, EquivCaps, EquivReport, SampledFunction};
use torusdisc::numfield::NumberField;
use torusdisc::ratlin::arith::primes_up_to;
use torusdisc::torus::EmbeddedTorus;

use crate::config::{build_base_torus, expand_members, parse_poly, Config, Member};
use crate::error::{CliError, CliResult};
use crate::report::{
    int_str, rat_str, write_csv, ClassCsvRow, DeltaCsvRow, DiscCsvRow, EquivalenceRow, EyextCsvRow, RunReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    pub budget: u64,
    pub jobs: Option<usize>,
    pub method: CountMethod,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, budget: DEFAULT_BUDGET, jobs: None, method: CountMethod::Auto }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Delta,
    Disc,
    Verify,
    Classify(usize),
    Eyext,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Delta => "delta",
            Command::Disc => "disc",
            Command::Verify => "verify",
            Command::Classify(_) => "classify",
            Command::Eyext => "eyext",
        }
    }
}

/// Runs `f` on a pool of `jobs` threads, or the global pool.
fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::config("--jobs must be positive")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError::config(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Maps members concurrently; results and the reported error follow member order.
fn map_members<T: Send>(
    cfg: &Config,
    opts: &Options,
    f: impl Fn(&Member, &EmbeddedTorus) -> CliResult<T> + Sync,
) -> CliResult<Vec<T>> {
    if cfg.tori.is_empty() {
        return Err(CliError::config("no tori in configuration"));
    }
    let members = expand_members(cfg, opts.seed)?;
    let results = with_pool(opts.jobs, || {
        let bases: Vec<CliResult<EmbeddedTorus>> = cfg.tori.par_iter().map(build_base_torus).collect();
        let bases = bases.into_iter().collect::<CliResult<Vec<_>>>()?;
        let out: Vec<CliResult<T>> = members
            .par_iter()
            .map(|m| {
                let base = &bases[m.item];
                let torus = match &m.conjugator {
                    Some(g) => base.conjugate(g).map_err(|e| CliError::core(&m.label, e))?,
                    None => base.clone(),
                };
                f(m, &torus)
            })
            .collect();
        out.into_iter().collect::<CliResult<Vec<T>>>()
    })?;
    results
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaRecord {
    pub label: String,
    pub m: Option<u64>,
    pub n: usize,
    pub dimension: usize,
    pub delta: String,
    pub disc: String,
    pub order_index: String,
    pub etale_disc: String,
    pub equal: bool,
    pub product_formula: bool,
    /// Nonzero coordinates `[rank, value]` of the primitive wedge `ν`.
    pub nu: Vec<[String; 2]>,
}

pub fn cmd_delta(cfg: &Config, opts: &Options) -> CliResult<Vec<DeltaRecord>> {
    map_members(cfg, opts, |m, t| {
        let h = t.height_report();
        Ok(DeltaRecord {
            label: m.label.clone(),
            m: m.m,
            n: t.ambient_n(),
            dimension: t.dimension(),
            delta: int_str(&h.delta),
            disc: int_str(&h.disc),
            order_index: int_str(&h.order_index),
            etale_disc: int_str(&h.etale_disc),
            equal: h.equal,
            product_formula: h.product_formula,
            nu: t.tensor().nu.nonzero().into_iter().map(|(r, v)| [r.to_string(), v.to_string()]).collect(),
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalRecord {
    pub p: String,
    pub k: u32,
    pub units_o: String,
    pub units_lambda: String,
    pub index: String,
    pub method: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscRecord {
    pub label: String,
    pub m: Option<u64>,
    pub disc: String,
    pub d: String,
    pub d_mode: &'static str,
    pub global_index: String,
    pub delta: String,
    pub order_index: String,
    pub etale_disc: String,
    pub locals: Vec<LocalRecord>,
}

fn method_name(m: CountMethod) -> &'static str {
    match m {
        CountMethod::Auto => "auto",
        CountMethod::Enumerate => "enumerate",
        CountMethod::Structural => "structural",
    }
}

pub fn cmd_disc(cfg: &Config, opts: &Options) -> CliResult<Vec<DiscRecord>> {
    map_members(cfg, opts, |m, t| {
        let r = disc_k(t, SplittingMode::Auto, opts.method, opts.budget).map_err(|e| CliError::core(&m.label, e))?;
        Ok(DiscRecord {
            label: m.label.clone(),
            m: m.m,
            disc: int_str(&r.disc_value),
            d: int_str(&r.d),
            d_mode: match r.d_mode {
                SplittingDisc::Exact => "exact",
                SplittingDisc::EtaleSubstitute => "etale_substitute",
            },
            global_index: int_str(&r.global_index),
            delta: int_str(&r.delta),
            order_index: int_str(&r.order_index),
            etale_disc: int_str(&r.etale_disc),
            locals: r
                .locals
                .iter()
                .map(|l| LocalRecord {
                    p: int_str(&l.p),
                    k: l.k,
                    units_o: int_str(&l.units_o),
                    units_lambda: int_str(&l.units_lambda),
                    index: int_str(&l.index),
                    method: method_name(l.method),
                })
                .collect(),
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DominationRecord {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_sample: Option<String>,
}

impl DominationRecord {
    fn from(d: &Domination) -> Self {
        match d {
            Domination::Witness(w) => DominationRecord {
                status: "witness",
                exponent: Some(rat_str(&w.exponent)),
                constant: Some(rat_str(&w.constant)),
                failing_sample: None,
            },
            Domination::Failure(c) => DominationRecord {
                status: "failure",
                exponent: None,
                constant: None,
                failing_sample: Some(c.label.clone()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceRecord {
    /// `δ ≼ disc`
    pub delta_below_disc: DominationRecord,
    /// `disc ≼ δ`
    pub disc_below_delta: DominationRecord,
    pub a_cap: String,
    pub c_cap: String,
    pub samples: usize,
    pub scope: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct BandsRecord {
    pub forward_a_max: String,
    pub backward_a_max: String,
    pub c_max: String,
    pub within: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<EquivalenceRow>,
    pub equivalence: EquivalenceRecord,
    pub bands: Option<BandsRecord>,
    pub verified: bool,
    #[serde(skip)]
    pub report: Option<EquivReport>,
}

fn within(d: &Domination, a_max: &BigRational, c_max: &BigRational) -> bool {
    d.witness().is_some_and(|w| &w.exponent <= a_max && &w.constant <= c_max)
}

/// `δ` against `disc_K` over every member, with fitted equivalence witnesses.
pub fn cmd_verify(cfg: &Config, opts: &Options) -> CliResult<VerifyReport> {
    let rows: Vec<(String, EquivalenceRow, BigInt, BigInt)> = map_members(cfg, opts, |m, t| {
        let r = disc_k(t, SplittingMode::Auto, opts.method, opts.budget).map_err(|e| CliError::core(&m.label, e))?;
        let row = EquivalenceRow {
            m: m.parameter(),
            delta: int_str(&r.delta),
            disc: int_str(&r.disc_value),
            ratio: rat_str(&BigRational::new(r.delta.clone(), r.disc_value.clone())),
        };
        Ok((m.label.clone(), row, r.delta, r.disc_value))
    })?;
    let (labels, deltas, discs): (Vec<String>, Vec<BigRational>, Vec<BigRational>) = rows.iter().fold(
        (Vec::new(), Vec::new(), Vec::new()),
        |(mut l, mut d, mut c), (label, _, delta, disc)| {
            l.push(label.clone());
            d.push(BigRational::from_integer(delta.clone()));
            c.push(BigRational::from_integer(disc.clone()));
            (l, d, c)
        },
    );
    let core = |e| CliError::core("family", e);
    let delta_fn = SampledFunction::new(labels.clone(), deltas).map_err(core)?;
    let disc_fn = SampledFunction::new(labels, discs).map_err(core)?;
    let bands = match &cfg.bands {
        Some(b) => Some((b.forward_a_max.to_rational()?, b.backward_a_max.to_rational()?, b.c_max.to_rational()?)),
        None => None,
    };
    let caps = match &bands {
        Some((fa, ba, c)) => EquivCaps { a_max: fa.clone().max(ba.clone()), c_max: c.clone() },
        None => EquivCaps::default(),
    };
    let report = check_equivalence_with(&delta_fn, &disc_fn, &caps).map_err(core)?;
    let bands_record = bands.map(|(fa, ba, c)| BandsRecord {
        within: within(&report.forward, &fa, &c) && within(&report.backward, &ba, &c),
        forward_a_max: rat_str(&fa),
        backward_a_max: rat_str(&ba),
        c_max: rat_str(&c),
    });
    let verified = report.equivalent() && bands_record.as_ref().is_none_or(|b| b.within);
    Ok(VerifyReport {
        rows: rows.into_iter().map(|(_, r, _, _)| r).collect(),
        equivalence: EquivalenceRecord {
            delta_below_disc: DominationRecord::from(&report.forward),
            disc_below_delta: DominationRecord::from(&report.backward),
            a_cap: rat_str(&caps.a_max),
            c_cap: rat_str(&caps.c_max),
            samples: report.samples,
            scope: EquivReport::SCOPE_NOTE,
        },
        bands: bands_record,
        verified,
        report: Some(report),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub class: usize,
    pub rank: usize,
    pub witnesses: Vec<String>,
    pub basis: Vec<Vec<String>>,
}

pub fn cmd_classify(n: usize) -> CliResult<Vec<ClassRecord>> {
    let classes = enumerate_fixed_lattice_classes(n).map_err(|e| CliError::core(format!("N={n}"), e))?;
    Ok(classes
        .into_iter()
        .enumerate()
        .map(|(i, c)| ClassRecord {
            class: i + 1,
            rank: c.rank,
            witnesses: c.witnesses,
            basis: c.fixed_lattice.basis().row_iter().map(|r| r.iter().map(int_str).collect()).collect(),
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct EyextRecord {
    pub field: String,
    pub conductor_exponent: u32,
    pub primes_scanned: usize,
    pub rows: Vec<EyextCsvRow>,
    /// Least `c` with `index ≥ p/c` on every listed row.
    pub min_c: Option<String>,
}

/// Local indices of `ℤ + p^e·O` at `p` over a range of primes.
pub fn cmd_eyext(cfg: &Config, opts: &Options) -> CliResult<EyextRecord> {
    let e = cfg.eyext.as_ref().ok_or_else(|| CliError::config("missing \"eyext\" section"))?;
    let poly = parse_poly(&e.field)?;
    let k = NumberField::new(&poly).map_err(|err| CliError::core("eyext field", err))?;
    let primes: Vec<u64> = primes_up_to(e.p_max).into_iter().filter(|p| *p >= e.p_min).collect();
    let family = primes
        .iter()
        .map(|&p| {
            let m = p.checked_pow(e.conductor_exponent).ok_or_else(|| CliError::config("conductor overflows u64"))?;
            let pair = OrderPair::conductor(&k, m).map_err(|err| CliError::core(format!("p={p}"), err))?;
            Ok((pair, BigInt::from(p)))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let report = with_pool(opts.jobs, || {
        let parts: Vec<_> = family
            .par_iter()
            .map(|item| eyext_scan(std::slice::from_ref(item), opts.method, opts.budget))
            .collect();
        parts.into_iter().collect::<torusdisc::Result<Vec<_>>>()
    })?
    .map_err(|err| CliError::core("eyext", err))?;
    let rows: Vec<_> = report.into_iter().flat_map(|r| r.rows).collect();
    let min_c = rows.iter().map(|r| r.p_over_index.clone()).max();
    Ok(EyextRecord {
        field: format!("{:?}", poly.coeffs().iter().map(int_str).collect::<Vec<_>>()),
        conductor_exponent: e.conductor_exponent,
        primes_scanned: primes.len(),
        rows: rows
            .iter()
            .map(|r| EyextCsvRow { p: int_str(&r.p), index: int_str(&r.index), p_over_index: rat_str(&r.p_over_index) })
            .collect(),
        min_c: min_c.map(|c| rat_str(&c)),
    })
}

/// Rendered output of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: String,
    /// False when a verification property failed (exit code 1).
    pub verified: bool,
    pub diagnostics: Vec<String>,
}

fn json<T: Serialize>(cmd: &Command, opts: &Options, results: T) -> String {
    RunReport::new(cmd.name(), opts.seed, opts.budget, results).to_json()
}

pub fn execute(cmd: &Command, cfg: Option<&Config>, opts: &Options, format: Format) -> CliResult<Outcome> {
    let start = Instant::now();
    let need = || cfg.ok_or_else(|| CliError::config(format!("{} needs --config", cmd.name())));
    let mut diagnostics = Vec::new();
    let (output, verified) = match cmd {
        Command::Delta => {
            let recs = cmd_delta(need()?, opts)?;
            let ok = recs.iter().all(|r| r.equal && r.product_formula);
            let out = match format {
                Format::Json => json(cmd, opts, &recs),
                Format::Csv => write_csv(
                    &recs
                        .iter()
                        .map(|r| DeltaCsvRow {
                            label: r.label.clone(),
                            m: r.m,
                            delta: r.delta.clone(),
                            disc: r.disc.clone(),
                            order_index: r.order_index.clone(),
                            etale_disc: r.etale_disc.clone(),
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            (out, ok)
        }
        Command::Disc => {
            let recs = cmd_disc(need()?, opts)?;
            let out = match format {
                Format::Json => json(cmd, opts, &recs),
                Format::Csv => write_csv(
                    &recs
                        .iter()
                        .map(|r| DiscCsvRow {
                            label: r.label.clone(),
                            m: r.m,
                            disc: r.disc.clone(),
                            d: r.d.clone(),
                            d_mode: r.d_mode.to_string(),
                            global_index: r.global_index.clone(),
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            (out, true)
        }
        Command::Verify => {
            let rep = cmd_verify(need()?, opts)?;
            let eq = &rep.equivalence;
            let describe = |d: &DominationRecord| match (&d.exponent, &d.constant, &d.failing_sample) {
                (Some(a), Some(c), _) => format!("a = {a}, c = {c}"),
                (_, _, Some(s)) => format!("no witness within caps (worst sample {s})"),
                _ => "no witness".to_string(),
            };
            diagnostics.push(format!("delta <= c*disc^a: {}", describe(&eq.delta_below_disc)));
            diagnostics.push(format!("disc <= c*delta^a: {}", describe(&eq.disc_below_delta)));
            let out = match format {
                Format::Json => json(cmd, opts, &rep),
                Format::Csv => write_csv(&rep.rows),
            };
            (out, rep.verified)
        }
        Command::Classify(n) => {
            let recs = cmd_classify(*n)?;
            let out = match format {
                Format::Json => json(cmd, opts, &recs),
                Format::Csv => write_csv(
                    &recs
                        .iter()
                        .map(|r| ClassCsvRow {
                            class: r.class,
                            rank: r.rank,
                            witnesses: r.witnesses.join(" "),
                            basis: r.basis.iter().map(|row| row.join(" ")).collect::<Vec<_>>().join(";"),
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            (out, true)
        }
        Command::Eyext => {
            let rec = cmd_eyext(need()?, opts)?;
            if let Some(c) = &rec.min_c {
                diagnostics.push(format!("minimal witnessed c = {c}"));
            }
            let out = match format {
                Format::Json => json(cmd, opts, &rec),
                Format::Csv => write_csv(&rec.rows),
            };
            (out, true)
        }
    };
    diagnostics.push(format!("{} finished in {:.3}s", cmd.name(), start.elapsed().as_secs_f64()));
    Ok(Outcome { output, verified, diagnostics })
}
