//! Command-line front end: config files, argument handling and output.
//!
//! Config files are flat `key=value` text:
//!
//! ```text
//! # four punctures at 0, 1, 1/9, ∞
//! label=gamma1_6
//! punctures=1,1/9
//! rho=-1/3
//! order=30
//! fuchsian=-1/3
//! suites=all
//! ```
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or parse error.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::deform::compute_pack;
use crate::frobenius::{build_jet_operator, build_operator, frobenius_basis, SurfaceConfig};
use crate::gamma16;
use crate::scalar::{parse_rational, Rational};
use crate::suites::{run, RunOptions, SuiteSelection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Contents of a config file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub label: String,
    pub punctures: Vec<Rational>,
    pub rho: Vec<Rational>,
    pub order: i64,
    pub fuchsian: Option<Vec<Rational>>,
    pub suites: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    /// 1-based line, when the problem is tied to one.
    pub line: Option<usize>,
    pub key: Option<String>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.line {
            write!(f, "line {l}: ")?;
        }
        if let Some(k) = &self.key {
            write!(f, "{k}: ")?;
        }
        f.write_str(&self.message)
    }
}

impl std::error::Error for ConfigError {}

fn cfg_err(line: Option<usize>, key: &str, message: impl Into<String>) -> ConfigError {
    ConfigError { line, key: Some(key.to_string()), message: message.into() }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_rational(x).ok_or_else(|| format!("invalid rational '{}'", x.trim()))).collect()
}

fn join(list: &[Rational]) -> String {
    list.iter().map(Rational::to_string).collect::<Vec<_>>().join(",")
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut label = None;
        let mut punctures = None;
        let mut rho = None;
        let mut order = None;
        let mut fuchsian = None;
        let mut suites = None;
        for (k, raw) in text.lines().enumerate() {
            let line = Some(k + 1);
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(ConfigError { line, key: None, message: format!("expected key=value, got '{body}'") });
            };
            let (key, value) = (key.trim(), value.trim());
            let dup = |set: bool| if set { Err(cfg_err(line, key, "duplicate key")) } else { Ok(()) };
            let list = |v: &str| parse_rational_list(v).map_err(|m| cfg_err(line, key, m));
            match key {
                "label" => {
                    dup(label.is_some())?;
                    label = Some(value.to_string());
                }
                "punctures" => {
                    dup(punctures.is_some())?;
                    punctures = Some(list(value)?);
                }
                "rho" => {
                    dup(rho.is_some())?;
                    rho = Some(list(value)?);
                }
                "order" => {
                    dup(order.is_some())?;
                    let n: i64 = value.parse().map_err(|_| cfg_err(line, key, format!("invalid integer '{value}'")))?;
                    order = Some(n);
                }
                "fuchsian" => {
                    dup(fuchsian.is_some())?;
                    fuchsian = Some(list(value)?);
                }
                "suites" => {
                    dup(suites.is_some())?;
                    value.parse::<SuiteSelection>().map_err(|m| cfg_err(line, key, m))?;
                    suites = Some(value.to_string());
                }
                other => return Err(cfg_err(line, other, "unknown key")),
            }
        }
        let missing = |k: &str| cfg_err(None, k, "missing key");
        Ok(RunConfig {
            label: label.unwrap_or_else(|| "config".to_string()),
            punctures: punctures.ok_or_else(|| missing("punctures"))?,
            rho: rho.ok_or_else(|| missing("rho"))?,
            order: order.ok_or_else(|| missing("order"))?,
            fuchsian,
            suites,
        })
    }

    /// Canonical text form; `parse(serialize(c)) == c`.
    pub fn serialize(&self) -> String {
        let mut s = format!(
            "label={}\npunctures={}\nrho={}\norder={}\n",
            self.label,
            join(&self.punctures),
            join(&self.rho),
            self.order
        );
        if let Some(f) = &self.fuchsian {
            s.push_str(&format!("fuchsian={}\n", join(f)));
        }
        if let Some(x) = &self.suites {
            s.push_str(&format!("suites={x}\n"));
        }
        s
    }

    pub fn surface(&self) -> Result<SurfaceConfig, ConfigError> {
        let cfg = SurfaceConfig::new(self.punctures.clone(), self.rho.clone(), self.order).map_err(|e| {
            let key = match e {
                crate::error::FrobeniusError::AccessoryCount { .. } => "rho",
                crate::error::FrobeniusError::Order => "order",
                _ => "punctures",
            };
            cfg_err(None, key, e.to_string())
        })?;
        match &self.fuchsian {
            None => Ok(cfg),
            Some(v) => cfg.with_fuchsian_value(v.clone()).map_err(|e| cfg_err(None, "fuchsian", e.to_string())),
        }
    }

    pub fn gamma16(order: i64) -> Self {
        RunConfig {
            label: gamma16::LABEL.to_string(),
            punctures: gamma16::punctures(),
            rho: vec![gamma16::fuchsian_rho()],
            order,
            fuchsian: Some(vec![gamma16::fuchsian_rho()]),
            suites: None,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "uniformize", version, about = "Exact series for uniformizing equations of punctured spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Frobenius coefficients of y and b.
    Frobenius {
        #[command(flatten)]
        source: Source,
        /// Append dy/drho_i and db/drho_i rows.
        #[arg(long)]
        jets: bool,
        /// JSON instead of tab-separated lines.
        #[arg(long)]
        json: bool,
        /// Add 1 to b_1 (test harness).
        #[arg(long)]
        inject_typo: bool,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Comma list of frobenius, deform, fuchsian, theorem, eta, formal, all.
        #[arg(long)]
        suites: Option<String>,
        /// JSON instead of tab-separated lines.
        #[arg(long)]
        json: bool,
        /// Add 1 to b_1 before verifying (test harness).
        #[arg(long)]
        inject_typo: bool,
    },
    /// Reproduce the reference tables of the built-in example.
    Gamma16 {
        /// Highest exponent shown.
        #[arg(long, default_value_t = 12)]
        order: i64,
        /// JSON instead of tab-separated lines.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Config file (key=value lines).
    pub config: Option<PathBuf>,
    /// Built-in example instead of a config file.
    #[arg(long, value_parser = ["gamma16"])]
    pub example: Option<String>,
    /// Nonzero finite punctures, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub punctures: Option<String>,
    /// Accessory values rho_0..rho_{n-4}, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    /// Declared Fuchsian value of rho.
    #[arg(long, allow_hyphen_values = true)]
    pub fuchsian: Option<String>,
    /// Truncation order (overrides the config).
    #[arg(long)]
    pub order: Option<i64>,
}

const DEFAULT_ORDER: i64 = 30;

impl Source {
    fn load(&self) -> Result<RunConfig, ConfigError> {
        let given = [self.config.is_some(), self.example.is_some(), self.punctures.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(ConfigError {
                line: None,
                key: None,
                message: "give exactly one of a config file, --example, or --punctures".into(),
            });
        }
        let mut rc = if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ConfigError { line: None, key: None, message: format!("{}: {e}", path.display()) })?;
            RunConfig::parse(&text).map_err(|mut e| {
                e.message = format!("{} ({})", e.message, path.display());
                e
            })?
        } else if self.example.is_some() {
            RunConfig::gamma16(DEFAULT_ORDER)
        } else {
            let p = self.punctures.as_deref().unwrap_or_default();
            RunConfig {
                label: "cli".into(),
                punctures: parse_rational_list(p).map_err(|m| cfg_err(None, "punctures", m))?,
                rho: parse_rational_list(self.rho.as_deref().unwrap_or("")).map_err(|m| cfg_err(None, "rho", m))?,
                order: DEFAULT_ORDER,
                fuchsian: None,
                suites: None,
            }
        };
        if self.example.is_some() || self.config.is_some() {
            if let Some(r) = &self.rho {
                rc.rho = parse_rational_list(r).map_err(|m| cfg_err(None, "rho", m))?;
            }
        }
        if let Some(f) = &self.fuchsian {
            rc.fuchsian = Some(parse_rational_list(f).map_err(|m| cfg_err(None, "fuchsian", m))?);
        }
        if let Some(o) = self.order {
            rc.order = o;
        }
        Ok(rc)
    }
}

#[derive(Serialize)]
struct Row {
    name: String,
    exponent: i64,
    value: String,
}

fn tsv(out: &mut dyn Write, rows: &[Row]) -> std::io::Result<()> {
    for r in rows {
        writeln!(out, "{}\t{}\t{}", r.name, r.exponent, r.value)?;
    }
    Ok(())
}

/// Run with explicit arguments (including the program name) and streams.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Frobenius { source, jets, json, inject_typo } => cmd_frobenius(&source, jets, json, inject_typo, out),
        Command::Verify { source, suites, json, inject_typo } => cmd_verify(&source, suites, json, inject_typo, out),
        Command::Gamma16 { order, json } => cmd_gamma16(order, json, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        // reader went away (`| head`); nothing left to report
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Compute(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAIL
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(std::io::Error),
    Compute(String),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn compute<E: fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

fn cmd_frobenius(source: &Source, jets: bool, json: bool, inject_typo: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rc = source.load()?;
    let cfg = rc.surface()?;
    let n = cfg.order();
    let op = build_operator(&cfg);
    let mut basis = frobenius_basis(&op, n).map_err(compute)?;
    if inject_typo {
        basis.b = &basis.b + &crate::series::Series::monomial(crate::scalar::int(1), 1, n);
    }
    let mut rows = Vec::new();
    let mut push = |name: String, s: &crate::series::Series<Rational>| {
        for m in 0..n {
            rows.push(Row { name: name.clone(), exponent: m, value: s.coeff(m).to_string() });
        }
    };
    push("y".into(), &basis.y);
    push("b".into(), &basis.b);
    if jets {
        let jb = frobenius_basis(&build_jet_operator(&cfg), n).map_err(compute)?;
        for i in 0..cfg.free_parameters() {
            push(format!("dy/drho{i}"), &jb.y.eps_part(i));
            push(format!("db/drho{i}"), &jb.b.eps_part(i));
        }
    }
    if json {
        let doc = json!({ "label": rc.label, "order": n, "kappa": op.kappa().to_string(), "rows": rows });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
    } else {
        tsv(out, &rows)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(source: &Source, suites: Option<String>, json: bool, inject_typo: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rc = source.load()?;
    let cfg = rc.surface()?;
    let list = suites.or(rc.suites.clone()).unwrap_or_else(|| "all".into());
    let selection: SuiteSelection = list.parse().map_err(|m| cfg_err(None, "suites", m))?;
    let chosen = selection.resolve(&cfg).map_err(CliError::Usage)?;
    let report = run(&cfg, &rc.label, &chosen, &RunOptions { inject_typo }).map_err(compute)?;
    let passed = report.passed();
    if json {
        let mut doc = serde_json::to_value(&report).expect("plain data");
        doc["passed"] = json!(passed);
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
    } else {
        let names: Vec<&str> = chosen.iter().map(|s| s.name()).collect();
        writeln!(out, "# {}  order {}  suites {}", rc.label, cfg.order(), names.join(","))?;
        for c in &report.checks {
            writeln!(out, "{c}")?;
        }
        if let Some(c) = &report.c {
            writeln!(out, "c = {c}")?;
        }
        let failed = report.checks.iter().filter(|c| c.failed()).count();
        if passed {
            writeln!(out, "RESULT\tPASS\t{} checks", report.checks.len())?;
        } else {
            writeln!(out, "RESULT\tFAIL\t{failed} of {} checks failed", report.checks.len())?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_gamma16(order: i64, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    if order < 1 {
        return Err(CliError::Usage("order: must be >= 1".into()));
    }
    let pack = compute_pack(&gamma16::config(order + 1)).map_err(compute)?;
    let mut rows = gamma16::reproduce(&pack, order).map_err(compute)?;
    rows.extend(gamma16::eta_rows(&pack, order).map_err(compute)?);
    let ok = !rows.iter().any(|r| r.status == gamma16::RowStatus::Mismatch);
    let opt = |r: &Option<Rational>| r.as_ref().map_or("-".to_string(), Rational::to_string);
    if json {
        let list: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "table": r.table,
                    "exponent": r.exponent,
                    "computed": r.computed.to_string(),
                    "quoted_convention": r.mapped.to_string(),
                    "reference": r.reference.as_ref().map(Rational::to_string),
                    "status": r.status.as_str(),
                })
            })
            .collect();
        let doc = json!({ "order": order, "rows": list, "passed": ok });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
    } else {
        writeln!(out, "# table\texponent\tcomputed\treference\tstatus")?;
        writeln!(out, "# derivative tables are shown as -d/drho0, the convention of the reference values")?;
        for r in &rows {
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.table, r.exponent, r.mapped, opt(&r.reference), r.status.as_str())?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
