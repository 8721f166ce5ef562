//! Command-line front end.
//!
//! Every run is validated in full before any computation starts, and the
//! whole report is assembled in memory before anything is written, so a
//! failing run never leaves a partial output file.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rug::{Float, Rational};
use serde_json::{json, Value};

use crate::asymptotics::{self, MainTermKind};
use crate::bigreal;
use crate::cyclotomic::CyclotomicValue;
use crate::invariants::{is_prime, InvariantFamily};
use crate::qseries::eta_inv24_table;
use crate::rademacher::{self, a_exact, a_resolved, RademacherResult};
use crate::turan::{turan_scan, TuranTarget};
use crate::verify::{self, Suite};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Coefficients a(n) of η(q)^-24
    Coeffs,
    /// Vafa–Witten invariants from the closed forms
    Invariant,
    /// a(n) from the convergent Bessel series
    Exact,
    /// Leading-term asymptotics and relative errors
    Asymp,
    /// Jensen-polynomial hyperbolicity scan
    Turan,
    /// Run the verification suite
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Eta,
    #[value(name = "su_r")]
    SuR,
    #[value(name = "su_p")]
    SuP,
    Twisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Small,
    Full,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "k3vw", version, about = "Coefficients of η^-24 and Vafa–Witten invariants of K3 surfaces")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "eta")]
    pub family: FamilyKind,
    /// Rank for su_r
    #[arg(long)]
    pub r: Option<u32>,
    /// Prime for su_p and twisted
    #[arg(long)]
    pub p: Option<u32>,
    /// Use the zero class w = 0 (su_p)
    #[arg(long)]
    pub w_zero: bool,
    /// Self-intersection w² (su_p)
    #[arg(long, allow_hyphen_values = true)]
    pub w_squared: Option<i64>,
    /// Picard number 1..=22 (twisted)
    #[arg(long)]
    pub rho: Option<u32>,

    #[arg(long, allow_hyphen_values = true)]
    pub n_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub n_max: Option<i64>,
    /// Number of k-terms for `exact`; omit to use the doubling policy
    #[arg(long)]
    pub terms: Option<u64>,
    /// Working precision in bits
    #[arg(long, env = "VW_PRECISION_BITS")]
    pub precision: Option<u32>,
    /// Jensen polynomial degree for `turan`
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    /// Scan n ↦ α(step·n) instead of the default subsequence
    #[arg(long)]
    pub step: Option<i64>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "small")]
    pub suite: SuiteArg,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
}

/// Failure of a run, mapped to an exit status.
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Failed(String),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Failed(e.to_string())
    }
}

fn usage(flag: &str, msg: impl std::fmt::Display) -> RunError {
    RunError::Usage(format!("{flag}: {msg}"))
}

/// The report plus whether it records a verification failure.
pub struct Report {
    pub text: String,
    pub failed: bool,
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, RunError> {
    value.ok_or_else(|| usage(flag, format!("required for --family {family}")))
}

fn reject<T>(value: Option<T>, flag: &str, family: &str) -> Result<(), RunError> {
    match value {
        Some(_) => Err(usage(flag, format!("not used by --family {family}"))),
        None => Ok(()),
    }
}

/// `None` for the η family itself.
fn family_from(cfg: &RunConfig) -> Result<Option<InvariantFamily>, RunError> {
    let no_w = |name| -> Result<(), RunError> {
        reject(cfg.w_squared, "--w-squared", name)?;
        if cfg.w_zero {
            return Err(usage("--w-zero", format!("not used by --family {name}")));
        }
        Ok(())
    };
    match cfg.family {
        FamilyKind::Eta => {
            reject(cfg.r, "--r", "eta")?;
            reject(cfg.p, "--p", "eta")?;
            reject(cfg.rho, "--rho", "eta")?;
            no_w("eta")?;
            Ok(None)
        }
        FamilyKind::SuR => {
            reject(cfg.p, "--p", "su_r")?;
            reject(cfg.rho, "--rho", "su_r")?;
            no_w("su_r")?;
            let r = need(cfg.r, "--r", "su_r")?;
            InvariantFamily::su_r(r).map(Some).map_err(|e| usage("--r", e))
        }
        FamilyKind::SuP => {
            reject(cfg.r, "--r", "su_p")?;
            reject(cfg.rho, "--rho", "su_p")?;
            let p = need(cfg.p, "--p", "su_p")?;
            if !is_prime(p) {
                return Err(usage("--p", format!("{p} is not prime")));
            }
            let w2 = match (cfg.w_zero, cfg.w_squared) {
                (true, None) => 0,
                (_, Some(v)) => v,
                (false, None) => return Err(usage("--w-squared", "required unless --w-zero is given")),
            };
            InvariantFamily::su_p(p, cfg.w_zero, w2).map(Some).map_err(|e| usage("--w-squared", e))
        }
        FamilyKind::Twisted => {
            reject(cfg.r, "--r", "twisted")?;
            no_w("twisted")?;
            let p = need(cfg.p, "--p", "twisted")?;
            if !is_prime(p) {
                return Err(usage("--p", format!("{p} is not prime")));
            }
            let rho = need(cfg.rho, "--rho", "twisted")?;
            InvariantFamily::twisted(p, rho).map(Some).map_err(|e| usage("--rho", e))
        }
    }
}

/// Checks every flag combination and returns the parsed family.
pub fn validate(cfg: &RunConfig) -> Result<Option<InvariantFamily>, RunError> {
    let family = family_from(cfg)?;
    let cmd = cfg.command;
    if let Some(bits) = cfg.precision {
        if bits < rademacher::MIN_PRECISION {
            return Err(usage("--precision", format!("must be at least {} bits", rademacher::MIN_PRECISION)));
        }
    }
    if cfg.threads == Some(0) {
        return Err(usage("--threads", "must be positive"));
    }
    if cmd != Command::Exact && cfg.terms.is_some() {
        return Err(usage("--terms", "only used by `exact`"));
    }
    if cmd != Command::Turan && cfg.step.is_some() {
        return Err(usage("--step", "only used by `turan`"));
    }
    if cfg.terms == Some(0) {
        return Err(usage("--terms", "must be positive"));
    }
    match cmd {
        Command::Verify => {
            if family.is_some() {
                return Err(usage("--family", "not used by `verify`"));
            }
            return Ok(None);
        }
        Command::Coeffs | Command::Exact => {
            if family.is_some() {
                return Err(usage("--family", format!("`{}` only supports eta", command_name(cmd))));
            }
        }
        Command::Invariant => {
            if family.is_none() {
                return Err(usage("--family", "`invariant` needs su_r, su_p or twisted"));
            }
        }
        Command::Turan => {
            if family.is_none() {
                return Err(usage("--family", "`turan` needs su_r, su_p or twisted (α₁,₁ is su_r --r 1)"));
            }
            if cfg.d == 0 {
                return Err(usage("--d", "must be positive"));
            }
            if cfg.step.is_some_and(|step| step < 1) {
                return Err(usage("--step", "must be positive"));
            }
        }
        Command::Asymp => {}
    }
    let n_max = cfg.n_max.ok_or_else(|| usage("--n-max", "required"))?;
    let n_min = n_min_for(cfg);
    if n_max < n_min {
        return Err(usage("--n-max", format!("{n_max} is below --n-min {n_min}")));
    }
    let floor = match cmd {
        Command::Coeffs => -1,
        Command::Exact | Command::Asymp | Command::Turan => 1,
        _ => i64::MIN,
    };
    if n_min < floor {
        return Err(usage("--n-min", format!("must be at least {floor} for `{}`", command_name(cmd))));
    }
    if cmd == Command::Coeffs && n_max < 0 {
        return Err(usage("--n-max", "must be non-negative"));
    }
    Ok(family)
}

fn command_name(cmd: Command) -> &'static str {
    match cmd {
        Command::Coeffs => "coeffs",
        Command::Invariant => "invariant",
        Command::Exact => "exact",
        Command::Asymp => "asymp",
        Command::Turan => "turan",
        Command::Verify => "verify",
    }
}

fn n_min_for(cfg: &RunConfig) -> i64 {
    cfg.n_min.unwrap_or(match cfg.command {
        Command::Coeffs => -1,
        Command::Invariant => 0,
        _ => 1,
    })
}

fn rational_string(q: &Rational) -> String {
    q.to_string()
}

fn decimal(x: &Float) -> String {
    bigreal::to_decimal(x, bigreal::digits_for_bits(x.prec()))
}

fn cyclotomic_json(v: &CyclotomicValue, prec: u32) -> Value {
    let (re, im) = v.to_complex(prec);
    json!({
        "p": v.order() / 2,
        "coeffs": v.coeffs().iter().map(rational_string).collect::<Vec<_>>(),
        "approx_re": decimal(&re),
        "approx_im": decimal(&im),
        "precision": prec,
    })
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Vec<Value>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new(), json: Vec::new() }
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Csv => {
                out.push_str(&self.header.join(","));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            Format::Json => {
                for record in &self.json {
                    out.push_str(&record.to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn run_coeffs(cfg: &RunConfig, n_min: i64, n_max: i64) -> Result<Report, RunError> {
    let table = eta_inv24_table(n_max)?;
    let mut t = Table::new(vec!["n", "a_n"]);
    for n in n_min..=n_max {
        let a = table.get(n)?.to_string();
        t.json.push(json!({ "n": n, "a_n": a }));
        t.rows.push(vec![n.to_string(), a]);
    }
    Ok(Report { text: t.render(cfg.format), failed: false })
}

fn run_invariant(cfg: &RunConfig, family: &InvariantFamily, n_min: i64, n_max: i64) -> Result<Report, RunError> {
    let table = eta_inv24_table(family.required_table_index(n_max))?;
    let prec = cfg.precision.unwrap_or(128);
    let label = family.to_string();
    let cyclotomic = matches!(family, InvariantFamily::SuPModCenter { .. });
    let mut t = if cyclotomic {
        Table::new(vec!["n", "exponent", "value", "approx_re", "approx_im"])
    } else {
        Table::new(vec!["n", "exponent", "value"])
    };
    for n in n_min..=n_max {
        let v = family.value(n, &table)?;
        let exponent = rational_string(&Rational::from((n, family.exponent_denominator() as i64)));
        if cyclotomic {
            let record = cyclotomic_json(&v, prec);
            t.rows.push(vec![
                n.to_string(),
                exponent.clone(),
                v.to_string(),
                record["approx_re"].as_str().unwrap_or_default().to_string(),
                record["approx_im"].as_str().unwrap_or_default().to_string(),
            ]);
            t.json.push(json!({ "family": label, "n": n, "exponent": exponent, "value": record }));
        } else {
            let q = v.as_rational().expect("rational family");
            t.rows.push(vec![n.to_string(), exponent.clone(), rational_string(q)]);
            t.json.push(json!({ "family": label, "n": n, "exponent": exponent, "value": rational_string(q) }));
        }
    }
    Ok(Report { text: t.render(cfg.format), failed: false })
}

fn run_exact(cfg: &RunConfig, n_min: i64, n_max: i64) -> Result<Report, RunError> {
    let table = eta_inv24_table(n_max)?;
    let mut t = Table::new(vec![
        "n", "terms", "precision", "approximation", "rounded", "table", "residual", "status",
    ]);
    let mut failed = false;
    for n in n_min..=n_max {
        let n_u = n as u64;
        let result: RademacherResult = match cfg.terms {
            Some(k) => {
                let prec = cfg.precision.unwrap_or_else(|| rademacher::default_precision(n_u));
                a_exact(n_u, k, prec)?
            }
            None => match a_resolved(n_u, cfg.precision) {
                Ok(r) => r,
                Err(e @ Error::Unresolved { .. }) => {
                    failed = true;
                    eprintln!("warning: {e}");
                    continue;
                }
                Err(e) => return Err(e.into()),
            },
        };
        let want = table.get(n)?;
        let matches = &result.rounded == want && result.status == rademacher::Status::Resolved;
        failed |= !matches;
        let status = if matches { "resolved" } else { "mismatch" };
        let approx = decimal(&result.approximation);
        let residual = bigreal::to_decimal(&Float::with_val(64, result.residual), 6);
        t.json.push(json!({
            "n": n,
            "terms": result.terms,
            "precision": result.precision,
            "approximation": approx,
            "rounded": result.rounded.to_string(),
            "table": want.to_string(),
            "residual": residual,
            "status": status,
        }));
        t.rows.push(vec![
            n.to_string(),
            result.terms.to_string(),
            result.precision.to_string(),
            approx,
            result.rounded.to_string(),
            want.to_string(),
            residual,
            status.to_string(),
        ]);
    }
    Ok(Report { text: t.render(cfg.format), failed })
}

fn run_asymp(
    cfg: &RunConfig,
    family: Option<&InvariantFamily>,
    n_min: i64,
    n_max: i64,
) -> Result<Report, RunError> {
    let need = family.map_or(n_max, |f| f.required_table_index(n_max));
    let table = eta_inv24_table(need)?;
    let prec = cfg.precision.unwrap_or(256);
    let label = family.map_or("eta".to_string(), |f| f.to_string());
    let mut t = Table::new(vec![
        "n", "exact", "main_term", "relative_error", "bound_scale", "kind",
    ]);
    for n in n_min..=n_max {
        let report = match family {
            None => asymptotics::report_a(n, &table, prec),
            Some(f) => asymptotics::report_family(f, n, &table, prec),
        };
        match report {
            Ok(r) => {
                let kind = match r.kind {
                    MainTermKind::Leading => "leading",
                    MainTermKind::SupersingularFallback => "supersingular-fallback",
                };
                let cells = [
                    rational_string(&r.exact),
                    decimal(&r.main_term),
                    bigreal::to_decimal(&r.relative_error, 12),
                    bigreal::to_decimal(&r.bound_scale, 12),
                ];
                t.json.push(json!({
                    "family": label,
                    "n": n,
                    "exact": cells[0],
                    "main_term": cells[1],
                    "relative_error": cells[2],
                    "bound_scale": cells[3],
                    "kind": kind,
                    "precision": r.main_term.prec(),
                }));
                let mut row = vec![n.to_string()];
                row.extend(cells);
                row.push(kind.to_string());
                t.rows.push(row);
            }
            Err(Error::ZeroMainTerm { .. }) => {
                let exact = family.expect("family").value(n, &table)?;
                let shown = exact.to_string();
                t.json.push(json!({
                    "family": label,
                    "n": n,
                    "exact": shown,
                    "main_term": Value::Null,
                    "kind": "zero-main-term",
                }));
                t.rows.push(vec![n.to_string(), shown, String::new(), String::new(), String::new(), "zero-main-term".into()]);
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Report { text: t.render(cfg.format), failed: false })
}

fn join(list: &[i64]) -> String {
    list.iter().map(i64::to_string).collect::<Vec<_>>().join(";")
}

fn run_turan(cfg: &RunConfig, family: &InvariantFamily, n_min: i64, n_max: i64) -> Result<Report, RunError> {
    let target = match cfg.step {
        None => TuranTarget::family_targets(*family)[0],
        Some(step) => TuranTarget {
            family: *family,
            step,
            real_embedding: TuranTarget::family_targets(*family)
                .iter()
                .any(|t| t.step == step && t.real_embedding),
        },
    };
    let table = eta_inv24_table(target.required_table_index(n_max + cfg.d as i64))?;
    let report = turan_scan(&target, cfg.d, n_min, n_max, &table)?;
    let text = match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string(&report).map_err(|e| RunError::Failed(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(
                "target,d,n_min,n_max,first_hyperbolic_n,failures,hankel_positive_from,hankel_boundary,nonpositive,imaginary_flagged\n",
            );
            let opt = |v: Option<i64>| v.map_or("none".to_string(), |n| n.to_string());
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{}",
                report.target,
                report.d,
                report.n_min,
                report.n_max,
                opt(report.first_hyperbolic_n),
                join(&report.failures),
                opt(report.hankel_positive_from),
                join(&report.hankel_boundary),
                join(&report.nonpositive),
                join(&report.imaginary_flagged),
            );
            s
        }
    };
    Ok(Report { text, failed: false })
}

fn run_verify(cfg: &RunConfig) -> Result<Report, RunError> {
    let suite = match cfg.suite {
        SuiteArg::Small => Suite::Small,
        SuiteArg::Full => Suite::Full,
    };
    let outcomes = verify::run_suite(suite)?;
    let failed = outcomes.iter().any(|o| !o.passed);
    let text = match cfg.format {
        Format::Csv => verify::render(&outcomes),
        Format::Json => outcomes
            .iter()
            .map(|o| {
                json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }).to_string() + "\n"
            })
            .collect(),
    };
    Ok(Report { text, failed })
}

/// Validates `cfg`, runs the command and returns the finished report.
pub fn run(cfg: &RunConfig) -> Result<Report, RunError> {
    let family = validate(cfg)?;
    let n_min = n_min_for(cfg);
    let n_max = cfg.n_max.unwrap_or(0);
    match cfg.command {
        Command::Coeffs => run_coeffs(cfg, n_min, n_max),
        Command::Invariant => run_invariant(cfg, family.as_ref().expect("validated"), n_min, n_max),
        Command::Exact => run_exact(cfg, n_min, n_max),
        Command::Asymp => run_asymp(cfg, family.as_ref(), n_min, n_max),
        Command::Turan => run_turan(cfg, family.as_ref().expect("validated"), n_min, n_max),
        Command::Verify => run_verify(cfg),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> std::io::Result<()> {
    match &cfg.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Parses `args`, runs, writes the report and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cfg.threads {
        if threads > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
        }
    }
    match run(&cfg) {
        Ok(report) => {
            if let Err(e) = emit(&cfg, &report.text) {
                eprintln!("error: writing output: {e}");
                return EXIT_FAILURE;
            }
            if report.failed { EXIT_FAILURE } else { EXIT_OK }
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(RunError::Failed(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("k3vw").chain(args.iter().copied())).unwrap()
    }

    fn output(args: &[&str]) -> String {
        run(&cfg(args)).expect("run succeeds").text
    }

    fn usage_flag(args: &[&str]) -> String {
        match run(&cfg(args)) {
            Err(RunError::Usage(msg)) => msg,
            _ => panic!("expected usage error for {args:?}"),
        }
    }

    #[test]
    fn coeffs_csv() {
        let text = output(&["coeffs", "--n-max", "10", "--format", "csv"]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,a_n");
        assert_eq!(lines.len(), 13);
        assert_eq!(lines[1], "-1,1");
        assert_eq!(lines[2], "0,24");
    }

    #[test]
    fn invariant_json_su2() {
        let text = output(&["invariant", "--family", "su_r", "--r", "2", "--n-min", "0", "--n-max", "2", "--format", "json"]);
        let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(last["n"], 2);
        assert_eq!(last["value"], "30");
        let first: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["value"], "1/4");
    }

    #[test]
    fn invariant_cyclotomic_record() {
        let text = output(&["invariant", "--family", "su_p", "--p", "2", "--w-squared", "1", "--n-min", "1", "--n-max", "1", "--format", "json"]);
        let rec: Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(rec["value"]["p"], 2);
        assert_eq!(rec["value"]["coeffs"], json!(["162", "162"]));
        assert_eq!(rec["value"]["precision"], 128);
    }

    #[test]
    fn usage_errors_name_the_flag() {
        assert!(usage_flag(&["invariant", "--family", "su_p", "--p", "4", "--w-zero", "--n-max", "3"]).starts_with("--p"));
        assert!(usage_flag(&["invariant", "--family", "su_r", "--n-max", "3"]).starts_with("--r"));
        assert!(usage_flag(&["coeffs"]).starts_with("--n-max"));
        assert!(usage_flag(&["coeffs", "--n-max", "3", "--terms", "4"]).starts_with("--terms"));
        assert!(usage_flag(&["turan", "--n-max", "3"]).starts_with("--family"));
        assert!(usage_flag(&["exact", "--n-max", "3", "--precision", "8"]).starts_with("--precision"));
        assert!(usage_flag(&["invariant", "--family", "twisted", "--p", "3", "--rho", "23", "--n-max", "3"]).starts_with("--rho"));
        assert!(usage_flag(&["coeffs", "--n-max", "3", "--n-min", "-5"]).starts_with("--n-min"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["k3vw", "coeffs", "--n-max", "x"]), EXIT_USAGE);
        assert_eq!(main_with_args(["k3vw", "coeffs", "--family", "su_r", "--r", "2", "--n-max", "3"]), EXIT_USAGE);
    }

    #[test]
    fn exact_and_turan_small() {
        let text = output(&["exact", "--n-min", "1", "--n-max", "3"]);
        assert!(text.lines().skip(1).all(|l| l.ends_with(",resolved")), "{text}");
        let text = output(&["turan", "--family", "su_r", "--r", "1", "--n-max", "30", "--format", "json"]);
        let rec: Value = serde_json::from_str(text.trim()).unwrap();
        assert!(rec["first_hyperbolic_n"].as_i64().unwrap() <= 10);
    }

    #[test]
    fn asymp_marks_zero_main_terms() {
        let text = output(&["asymp", "--family", "su_p", "--p", "3", "--w-squared", "6", "--n-min", "3", "--n-max", "4"]);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[1].ends_with(",leading"));
        assert!(lines[2].ends_with(",zero-main-term"));
    }
}
