//! Machine-readable output records. Exact values travel as decimal strings.

use std::io::{Read, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use regcurv_core::certify::{Certificate, Condition, ObstructionQuadratic, Outcome, ScanRow};
use regcurv_core::spectral::QuadraticSurd;
use regcurv_core::transport::CurvatureReport;
use regcurv_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A reduced fraction as `{"num": "...", "den": "..."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for Fraction {
    fn from(r: &Rational) -> Self {
        Self { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl Fraction {
    pub fn to_rational(&self) -> Result<Rational> {
        let parse = |s: &str| BigInt::from_str(s).map_err(|e| CliError::Config(format!("bad integer `{s}`: {e}")));
        let den = parse(&self.den)?;
        if den == BigInt::from(0) {
            return Err(CliError::Config("zero denominator".into()));
        }
        Ok(Rational::new(parse(&self.num)?, den))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureRecord {
    pub x: usize,
    pub y: usize,
    pub kappa: Fraction,
    pub delta_size: usize,
    pub upper_bound: Fraction,
    pub sharp: bool,
    pub min_cost: u64,
    pub witness: Vec<[usize; 2]>,
}

impl From<&CurvatureReport> for CurvatureRecord {
    fn from(r: &CurvatureReport) -> Self {
        Self {
            x: r.edge.0,
            y: r.edge.1,
            kappa: (&r.kappa).into(),
            delta_size: r.delta_size,
            upper_bound: (&r.upper_bound).into(),
            sharp: r.sharp,
            min_cost: r.min_cost,
            witness: r.witness.iter().map(|&(v, u)| [v, u]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureOutput {
    pub config: serde_json::Value,
    pub n: usize,
    pub min_kappa: Fraction,
    pub edges: Vec<CurvatureRecord>,
}

/// One CSV line of `curvature --format csv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureCsvRow {
    pub x: usize,
    pub y: usize,
    pub kappa_num: String,
    pub kappa_den: String,
    pub delta_size: usize,
    pub upper_num: String,
    pub upper_den: String,
    pub sharp: u8,
    pub min_cost: u64,
}

impl From<&CurvatureReport> for CurvatureCsvRow {
    fn from(r: &CurvatureReport) -> Self {
        Self {
            x: r.edge.0,
            y: r.edge.1,
            kappa_num: r.kappa.numer().to_string(),
            kappa_den: r.kappa.denom().to_string(),
            delta_size: r.delta_size,
            upper_num: r.upper_bound.numer().to_string(),
            upper_den: r.upper_bound.denom().to_string(),
            sharp: u8::from(r.sharp),
            min_cost: r.min_cost,
        }
    }
}

/// One CSV line of the parameter scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
    pub beta: usize,
    pub cond1: u8,
    pub cond2: u8,
    pub cond3: u8,
    pub cond4: u8,
    pub cond5: u8,
    pub hlx: u8,
    pub ll: u8,
    pub sweep: u8,
    pub conference: u8,
    pub kappa_num: Option<String>,
    pub kappa_den: Option<String>,
}

impl From<&ScanRow> for ScanRecord {
    fn from(r: &ScanRow) -> Self {
        let c = &r.conditions;
        let kappa = r.certificate.certified_kappa.as_ref();
        Self {
            n: r.params.n,
            d: r.params.d,
            alpha: r.params.alpha,
            beta: r.params.beta,
            cond1: c.cond1.into(),
            cond2: c.cond2.into(),
            cond3: c.cond3.into(),
            cond4: c.cond4.into(),
            cond5: c.cond5.into(),
            hlx: c.hlx.into(),
            ll: c.ll.into(),
            sweep: r.certificate.by_sweep().into(),
            conference: r.conference.into(),
            kappa_num: kappa.map(|k| k.numer().to_string()),
            kappa_den: kappa.map(|k| k.denom().to_string()),
        }
    }
}

/// Writes CSV rows after a `# config: ...` comment line.
pub fn write_csv<W: Write, T: Serialize>(mut out: W, config: &serde_json::Value, rows: &[T]) -> Result<()> {
    writeln!(out, "# config: {config}")?;
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads CSV rows written by [`write_csv`], skipping `#` comment lines.
pub fn read_csv<R: Read, T: for<'de> Deserialize<'de>>(input: R) -> Result<Vec<T>> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    r.deserialize().map(|row| row.map_err(CliError::from)).collect()
}

pub fn surd_json(s: &QuadraticSurd) -> serde_json::Value {
    serde_json::json!({
        "u": s.u,
        "v": s.v,
        "w": s.w,
        "D": s.d,
        "exact": s.as_rational().map(|r| Fraction::from(&r)),
        "value": s.to_f64(),
    })
}

pub fn quadratic_json(q: &ObstructionQuadratic) -> serde_json::Value {
    serde_json::json!({
        "b": q.b,
        "a2": Fraction::from(&q.a2),
        "a1": Fraction::from(&q.a1),
        "a0": Fraction::from(&q.a0),
        "discriminant": Fraction::from(&q.discriminant),
        "feasible": q.feasible,
    })
}

pub fn condition_names(list: &[Condition]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

pub fn outcome_name(c: &Certificate) -> &'static str {
    match c.outcome {
        Outcome::SharpByCondition(_) => "sharp_by_condition",
        Outcome::SharpByDiscriminantSweep(_) => "sharp_by_discriminant_sweep",
        Outcome::Inconclusive(_) => "inconclusive",
    }
}
