//! Command-line front end: `compute`, `enumerate`, `verify`, `tau-expand`.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage or parse error, 3 domain error (truncation too small, singular
//! `H_0`, insufficient series degree, …).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{rngs::StdRng, SeedableRng};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactalg::{
    ratfunc_latex, ratfunc_text, ratfunc_to_json, Rational, RationalFunction,
};
use crate::grassmann::{random_series, verify_theorem, FinitePoint, SeriesMatrix};
use crate::kp::{
    coefficients_from_json, exp_specialization, parse_time, tau_quotient_expansion,
    PsiInvSeries, TimeSeries,
};
use crate::maya::{parse_index, MayaSequence};
use crate::nschur::n_schur_at;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "nschur", version, about = "Exact n-Schur functions and grassmannian expansions")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Seed for randomly generated inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Reject input rationals whose denominator exceeds this bound.
    #[arg(long, global = true)]
    pub max_denominator: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print f_S^n for a partition or Maya prefix.
    Compute(ComputeArgs),
    /// List all indices of a given weight.
    Enumerate(EnumerateArgs),
    /// Check <0|g|W> = sum_S <S|W> f_S^n on a point and a numeric series.
    Verify(VerifyArgs),
    /// Expand sum_S pi_S f_S^n for a Psi^{-1} series.
    TauExpand(TauExpandArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(short = 'n', long = "n", default_value_t = 1)]
    pub n: usize,
    #[arg(long, conflicts_with = "maya", required_unless_present = "maya", allow_hyphen_values = true)]
    pub partition: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub maya: Option<String>,
    /// Truncation N (defaults to the minimal one).
    #[arg(short = 'N', long = "truncation")]
    pub truncation: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub weight: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// FinitePoint JSON file.
    #[arg(long)]
    pub point: PathBuf,
    /// SeriesMatrix JSON file; a random series (see --seed) when omitted.
    #[arg(long)]
    pub series: Option<PathBuf>,
    /// z-degree of the random series.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
}

#[derive(Debug, Args)]
pub struct TauExpandArgs {
    /// Psi^{-1} as series JSON or an {"exp": …} directive.
    #[arg(long, conflicts_with = "exp", required_unless_present = "exp")]
    pub psi: Option<PathBuf>,
    /// Comma-separated times for exp(sum t_i z^i), e.g. "t1,t2,1/2".
    #[arg(long)]
    pub exp: Option<String>,
    /// Coefficient map JSON file.
    #[arg(long)]
    pub coeffs: PathBuf,
    /// Series cutoff K (required with --exp; truncates --psi when given).
    #[arg(long)]
    pub degree: Option<usize>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidMaya(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(&cli, a, out),
        Command::Enumerate(a) => enumerate(&cli, a, out),
        Command::Verify(a) => verify(&cli, a, out),
        Command::TauExpand(a) => tau_expand(&cli, a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
    }
}

fn render(format: OutputFormat, f: &RationalFunction) -> String {
    match format {
        OutputFormat::Text => ratfunc_text(f),
        OutputFormat::Json => ratfunc_to_json(f).to_string(),
        OutputFormat::Latex => ratfunc_latex(f),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_denominator(cli: &Cli, what: &str, den: BigInt) -> std::result::Result<(), Failure> {
    match cli.max_denominator {
        Some(max) if den > BigInt::from(max) => Err(Failure::Usage(format!(
            "{what} has denominator {den}, above --max-denominator {max}"
        ))),
        _ => Ok(()),
    }
}

fn compute(cli: &Cli, a: &ComputeArgs, out: &mut dyn Write) -> CmdResult {
    if a.n == 0 {
        return Err(Failure::Usage("-n must be at least 1".into()));
    }
    // Either flag takes either syntax; they differ only in intent.
    let s = match (&a.partition, &a.maya) {
        (Some(x), None) | (None, Some(x)) => parse_index(x)?,
        _ => return Err(Failure::Usage("give exactly one of --partition, --maya".into())),
    };
    let truncation = a.truncation.unwrap_or_else(|| s.min_truncation(a.n));
    let f = n_schur_at(&s, a.n, truncation)?;
    emit(out, &render(cli.format, &f))
}

fn enumerate(cli: &Cli, a: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let weight = u32::try_from(a.weight)
        .map_err(|_| Failure::Usage(format!("weight must be a non-negative integer, got {}", a.weight)))?;
    let rows = MayaSequence::enumerate_by_weight(weight);
    let text = match cli.format {
        OutputFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|s| json!({"partition": s.to_partition().to_string(), "maya": s.to_string()}))
                .collect();
            Value::Array(items).to_string()
        }
        OutputFormat::Text => rows
            .iter()
            .map(|s| {
                let p = s.to_partition();
                let p = if p.is_empty() { "∅".to_string() } else { p.to_string() };
                format!("{p}\t{s}")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Latex => rows
            .iter()
            .map(|s| {
                let p = s.to_partition();
                let p = if p.is_empty() { "\\emptyset".to_string() } else { format!("({p})") };
                format!("{p} & {s} \\\\")
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(out, &text)
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let point = FinitePoint::from_json(&read_json(&a.point)?)?;
    check_denominator(cli, "point", point.max_denominator())?;
    let series = match &a.series {
        Some(path) => SeriesMatrix::from_json(&read_json(path)?)?,
        None => random_series(&mut StdRng::seed_from_u64(cli.seed), point.n(), a.degree, 9),
    };
    check_denominator(cli, "series", series.max_denominator())?;
    if !series.is_numeric() {
        return Err(Failure::Usage("verify needs a numeric series".into()));
    }
    if series.n() != point.n() {
        return Err(Failure::Usage(format!(
            "series has n={} but point has n={}",
            series.n(),
            point.n()
        )));
    }
    let rep = verify_theorem(&series, &point)?;
    let support: Vec<String> = rep.support.iter().map(MayaSequence::to_string).collect();
    let text = match cli.format {
        OutputFormat::Json => json!({
            "lhs": rep.lhs.to_string(),
            "rhs": rep.rhs.to_string(),
            "support": support,
            "truncation": rep.truncation,
            "stabilized": rep.stabilized,
            "pass": rep.pass,
        })
        .to_string(),
        OutputFormat::Text | OutputFormat::Latex => format!(
            "lhs: {}\nrhs: {}\nsupport: {} ({})\ntruncation: {}\nstabilized: {}\nresult: {}",
            rep.lhs,
            rep.rhs,
            support.len(),
            support.join(" "),
            rep.truncation,
            rep.stabilized,
            if rep.pass { "pass" } else { "FAIL" }
        ),
    };
    emit(out, &text)?;
    Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
}

fn tau_expand(cli: &Cli, a: &TauExpandArgs, out: &mut dyn Write) -> CmdResult {
    let psi = match (&a.psi, &a.exp) {
        (Some(path), None) => {
            let psi = PsiInvSeries::from_json(&read_json(path)?)?;
            match a.degree {
                Some(k) if k < psi.degree() => PsiInvSeries::new(psi.series().truncate(k)),
                _ => psi,
            }
        }
        (None, Some(times)) => {
            let degree = a
                .degree
                .ok_or_else(|| Failure::Usage("--exp needs --degree".into()))?;
            let times = times
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(parse_time)
                .collect::<crate::Result<Vec<_>>>()?;
            exp_specialization(&TimeSeries::new(times, degree))
        }
        _ => return Err(Failure::Usage("give exactly one of --psi, --exp".into())),
    };
    check_denominator(cli, "series", psi.series().max_denominator())?;
    let coeffs: BTreeMap<MayaSequence, Rational> = coefficients_from_json(&read_json(&a.coeffs)?)?;
    let den = coeffs.values().map(|c| c.denom().clone()).max().unwrap_or_default();
    check_denominator(cli, "coefficient map", den)?;
    let sum = tau_quotient_expansion(&psi, &coeffs)?;
    emit(out, &render(cli.format, &sum))
}
