//! Command-line interface.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regcurv_core::certify::{
    certify_curvature, evaluate_conditions, master_coefficients, Outcome,
};
use regcurv_core::generators::{named_graph, FamilyArgs};
use regcurv_core::matching::local_perfect_matching;
use regcurv_core::numtheory::{verify_corollary, CorollaryMode};
use regcurv_core::spectral::{
    lichnerowicz_report_from, numerical_lambda2, srg_spectrum, verify_srg_identity, SpectrumReport,
};
use regcurv_core::transport::lly_curvature;
use regcurv_core::{classify_regularity, RegularityClass, SrgParams};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::formats::{read_graph, render_graph, GraphFormat};
use crate::parallel;
use crate::records::{
    condition_names, outcome_name, quadratic_json, surd_json, write_csv, CurvatureCsvRow, CurvatureOutput,
    CurvatureRecord, Fraction, ScanRecord,
};

#[derive(Debug, Parser)]
#[command(name = "regcurv", version, about = "Exact edge curvature of regular graphs")]
pub struct Cli {
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named graph.
    Gen(GenArgs),
    /// Curvature of one edge or of every edge.
    Curvature(CurvatureArgs),
    /// Maximum matching between the exclusive neighbourhoods of an edge.
    Match(MatchArgs),
    /// Parameter-only sharpness certificate.
    Certify(CertifyArgs),
    /// Certify every feasible parameter set up to an order, as CSV.
    Scan(ScanArgs),
    /// Closed-form normalized Laplacian spectrum.
    Spectrum(SpectrumArgs),
    /// Compare the minimum curvature with λ2.
    Sharpness(SharpnessArgs),
    /// Check the quadratic-residue pattern statement over GF(q).
    Corollary(CorollaryArgs),
    /// Check κ = 1/2 + 1/(2γ) on every Paley conference graph up to γ.
    VerifyConjecture(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeArg(pub usize, pub usize);

impl FromStr for EdgeArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let v = parse_list(s, 2)?;
        Ok(Self(v[0], v[1]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsArg(pub [usize; 4]);

impl FromStr for ParamsArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let v = parse_list(s, 4)?;
        Ok(Self([v[0], v[1], v[2], v[3]]))
    }
}

impl ParamsArg {
    /// Parameters that also satisfy d(d-α-1) = (n-d-1)β.
    fn params(self) -> Result<SrgParams> {
        let [n, d, a, b] = self.0;
        let p = SrgParams::new(n, d, a, b)?;
        if !p.satisfies_identity() {
            return Err(regcurv_core::Error::NotSrgParameters.into());
        }
        Ok(p)
    }
}

fn parse_list(s: &str, len: usize) -> std::result::Result<Vec<usize>, String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|e| format!("`{t}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    if v.len() != len {
        return Err(format!("expected {len} comma-separated integers, got `{s}`"));
    }
    Ok(v)
}

#[derive(Debug, Args, Serialize)]
pub struct GenArgs {
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args, Serialize)]
pub struct CurvatureArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub edge: Option<EdgeArg>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct MatchArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub edge: EdgeArg,
    /// Include the matched pairs.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct CertifyArgs {
    /// n,d,alpha,beta
    #[arg(long)]
    pub params: ParamsArg,
    #[arg(long)]
    pub sweep_transcript: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct ScanArgs {
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub params: Option<ParamsArg>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SharpnessArgs {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args, Serialize)]
pub struct CorollaryArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub gamma_max: u64,
}

/// Result of a command: the bytes to emit and whether an assertion failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub failed: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Self { body, failed: false }
    }

    fn json(value: &Value, failed: bool) -> Result<Self> {
        let mut body = serde_json::to_string_pretty(value)?;
        body.push('\n');
        Ok(Self { body, failed })
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Self::Gen(_) => "gen",
            Self::Curvature(_) => "curvature",
            Self::Match(_) => "match",
            Self::Certify(_) => "certify",
            Self::Scan(_) => "scan",
            Self::Spectrum(_) => "spectrum",
            Self::Sharpness(_) => "sharpness",
            Self::Corollary(_) => "corollary",
            Self::VerifyConjecture(_) => "verify-conjecture",
        }
    }

    fn args_json(&self) -> Result<Value> {
        Ok(match self {
            Self::Gen(a) => serde_json::to_value(a)?,
            Self::Curvature(a) => serde_json::to_value(a)?,
            Self::Match(a) => serde_json::to_value(a)?,
            Self::Certify(a) => serde_json::to_value(a)?,
            Self::Scan(a) => serde_json::to_value(a)?,
            Self::Spectrum(a) => serde_json::to_value(a)?,
            Self::Sharpness(a) => serde_json::to_value(a)?,
            Self::Corollary(a) => serde_json::to_value(a)?,
            Self::VerifyConjecture(a) => serde_json::to_value(a)?,
        })
    }
}

pub fn resolved_threads(requested: Option<usize>) -> usize {
    requested
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// The full resolved configuration echoed into every output.
pub fn config_json(cli: &Cli) -> Result<Value> {
    Ok(json!({
        "command": cli.command.name(),
        "args": cli.command.args_json()?,
        "threads": resolved_threads(cli.threads),
    }))
}

/// Runs the parsed command on a dedicated thread pool.
pub fn run(cli: &Cli) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(resolved_threads(cli.threads))
        .build()
        .map_err(|e| CliError::ThreadPool(e.to_string()))?;
    let config = config_json(cli)?;
    pool.install(|| dispatch(&cli.command, config))
}

fn dispatch(command: &Command, config: Value) -> Result<Report> {
    match command {
        Command::Gen(a) => gen(a),
        Command::Curvature(a) => curvature(a, config),
        Command::Match(a) => matching(a, config),
        Command::Certify(a) => certify(a, config),
        Command::Scan(a) => scan(a, &config),
        Command::Spectrum(a) => spectrum(a, config),
        Command::Sharpness(a) => sharpness(a, config),
        Command::Corollary(a) => corollary(a, config),
        Command::VerifyConjecture(a) => verify(a, config),
    }
}

fn gen(a: &GenArgs) -> Result<Report> {
    let g = named_graph(&a.name, FamilyArgs { q: a.q, k: a.k, n: a.n })?;
    Ok(Report::ok(render_graph(&g, a.format)))
}

fn curvature(a: &CurvatureArgs, config: Value) -> Result<Report> {
    let g = read_graph(&a.graph)?;
    let reports = match a.edge {
        Some(EdgeArg(x, y)) => vec![lly_curvature(&g, x, y)?],
        None => parallel::curvature_spectrum(&g)?.reports,
    };
    match a.format {
        ReportFormat::Json => {
            let min = reports.iter().map(|r| &r.kappa).min().ok_or(regcurv_core::Error::InvalidGraph("no edges".into()))?;
            let out = CurvatureOutput {
                config,
                n: g.n(),
                min_kappa: min.into(),
                edges: reports.iter().map(CurvatureRecord::from).collect(),
            };
            Report::json(&serde_json::to_value(out)?, false)
        }
        ReportFormat::Csv => {
            let rows: Vec<CurvatureCsvRow> = reports.iter().map(CurvatureCsvRow::from).collect();
            let mut buf = Vec::new();
            write_csv(&mut buf, &config, &rows)?;
            Ok(Report::ok(String::from_utf8(buf).expect("csv output is UTF-8")))
        }
    }
}

fn matching(a: &MatchArgs, config: Value) -> Result<Report> {
    let g = read_graph(&a.graph)?;
    let EdgeArg(x, y) = a.edge;
    let inst = regcurv_core::matching::local_instance(&g, x, y)?;
    let r = local_perfect_matching(&g, x, y)?;
    let violator: Option<Vec<usize>> = r.violator.as_ref().map(|s| s.iter().map(|&i| inst.left[i]).collect());
    let mut out = json!({
        "config": config,
        "edge": [x, y],
        "nx": inst.left,
        "ny": inst.right,
        "matching_size": r.pairs.len(),
        "perfect": r.perfect,
        "violator": violator,
        "violator_neighbourhood": r.violator.as_ref().map(|s| inst.neighborhood(s).iter().map(|&j| inst.right[j]).collect::<Vec<_>>()),
    });
    if a.witness {
        let pairs: Vec<[usize; 2]> = r.pairs.iter().map(|&(i, j)| [inst.left[i], inst.right[j]]).collect();
        out["witness"] = json!(pairs);
    }
    Report::json(&out, false)
}

fn certify(a: &CertifyArgs, config: Value) -> Result<Report> {
    let params = a.params.params()?;
    let conditions = evaluate_conditions(&params);
    let cert = certify_curvature(&params);
    let mut out = json!({
        "config": config,
        "params": a.params.0,
        "conditions": {
            "cond1": conditions.cond1,
            "cond2": conditions.cond2,
            "cond3": conditions.cond3,
            "cond4": conditions.cond4,
            "cond5": conditions.cond5,
            "hlx": conditions.hlx,
            "ll": conditions.ll,
        },
        "outcome": outcome_name(&cert),
        "kappa": cert.certified_kappa.as_ref().map(Fraction::from),
    });
    match &cert.outcome {
        Outcome::SharpByCondition(list) => out["fired"] = json!(condition_names(list)),
        Outcome::Inconclusive(reason) => out["reason"] = json!(reason.to_string()),
        Outcome::SharpByDiscriminantSweep(t) => {
            out["b_one_rule"] = json!(t.b_one.to_string());
            if a.sweep_transcript {
                out["sweep"] = json!(t.per_b.iter().map(quadratic_json).collect::<Vec<_>>());
            }
        }
    }
    if a.sweep_transcript {
        if let Ok(m) = master_coefficients(&params) {
            out["master_coefficients"] = json!({
                "x2_fixed": Fraction::from(&m.x2_fixed),
                "x1_per_b": Fraction::from(&m.x1_per_b),
                "c_b2": Fraction::from(&m.c_b2),
                "c_b1": Fraction::from(&m.c_b1),
            });
        }
    }
    Report::json(&out, false)
}

fn scan(a: &ScanArgs, config: &Value) -> Result<Report> {
    let rows: Vec<ScanRecord> = parallel::scan_parameters(a.max_n)?.iter().map(ScanRecord::from).collect();
    let mut buf = Vec::new();
    write_csv(&mut buf, config, &rows)?;
    Ok(Report::ok(String::from_utf8(buf).expect("csv output is UTF-8")))
}

fn spectrum_json(s: &SpectrumReport) -> Value {
    json!({
        "params": [s.params.n, s.params.d, s.params.alpha, s.params.beta],
        "lambda1": Fraction::from(&s.lambda1),
        "lambda2": surd_json(&s.lambda2),
        "lambda3": surd_json(&s.lambda3),
        "m1": s.m1,
        "m2": s.m2,
        "m3": s.m3,
    })
}

fn spectrum(a: &SpectrumArgs, config: Value) -> Result<Report> {
    let mut out = json!({ "config": config });
    if let Some(p) = a.params {
        out["spectrum"] = spectrum_json(&srg_spectrum(&p.params()?)?);
    } else if let Some(path) = &a.graph {
        let g = read_graph(path)?;
        out["numerical_lambda2"] = json!(numerical_lambda2(&g)?);
        if let RegularityClass::StronglyRegular(p) = classify_regularity(&g) {
            out["spectrum"] = spectrum_json(&srg_spectrum(&p)?);
            out["identity_holds"] = json!(verify_srg_identity(&g, &p)?);
        } else {
            out["spectrum"] = Value::Null;
        }
    }
    Report::json(&out, false)
}

fn sharpness(a: &SharpnessArgs, config: Value) -> Result<Report> {
    let g = read_graph(&a.graph)?;
    let spectrum = parallel::curvature_spectrum(&g)?;
    let r = lichnerowicz_report_from(&g, spectrum.min_kappa)?;
    let out = json!({
        "config": config,
        "min_kappa": Fraction::from(&r.min_kappa),
        "lambda2": {
            "exact": r.lambda2.exact.as_ref().map(surd_json),
            "numeric": r.lambda2.numeric,
        },
        "sharp": r.sharp,
        "bound_kappa": r.bound_kappa.as_ref().map(Fraction::from),
    });
    Report::json(&out, false)
}

fn corollary(a: &CorollaryArgs, config: Value) -> Result<Report> {
    let mode = match a.mode {
        ModeArg::Exhaustive => CorollaryMode::Exhaustive,
        ModeArg::Sampled => CorollaryMode::Sampled { seed: a.seed, trials: a.trials },
    };
    let r = verify_corollary(a.q, mode)?;
    let failed = !r.failures.is_empty();
    let out = json!({
        "config": config,
        "status": if failed { "fail" } else { "pass" },
        "q": r.q,
        "pair": [r.pair.0, r.pair.1],
        "min_size": r.min_size,
        "subsets_tested": r.subsets_tested,
        "failures": r.failures,
    });
    Report::json(&out, failed)
}

fn verify(a: &VerifyArgs, config: Value) -> Result<Report> {
    let checks = parallel::verify_conference_curvature(a.gamma_max)?;
    let failed = checks.iter().any(|c| !c.failures.is_empty());
    let results: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "gamma": c.gamma,
                "q": c.q,
                "edges": c.edge_count,
                "expected": Fraction::from(&c.expected),
                "all_equal": c.failures.is_empty(),
                "failures": c.failures.iter().map(|((x, y), k)| json!({"edge": [x, y], "kappa": Fraction::from(k)})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let out = json!({
        "config": config,
        "status": if failed { "fail" } else { "pass" },
        "results": results,
    });
    Report::json(&out, failed)
}

