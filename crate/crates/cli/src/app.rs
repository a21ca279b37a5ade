use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use lascoux_core::identities::{Suite, VerificationReport};
use lascoux_core::{Engine, IndexSet, PsiTable, Route};
use rayon::prelude::*;

use crate::cache::PsiCache;
use crate::output::{self, csv_field, rat_str, set_str, LpDoc, PhiDoc, PsiDoc, TableRow};
use crate::shared::SharedPsiTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default ψ cache file.
pub const CACHE_ENV: &str = "LASCOUX_PSI_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "lascoux",
    version,
    about = "Exact Lascoux coefficients, Lascoux polynomials and ML-degree polynomials"
)]
pub struct Cli {
    /// JSON-lines file used to load and append ψ values
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Worker threads, or `auto`
    #[arg(long, global = true, default_value = "auto")]
    pub threads: Threads,
    /// Print ψ cache statistics to stderr
    #[arg(long, global = true)]
    pub stats: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

impl FromStr for Threads {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Threads::Fixed(n)),
            _ => Err(format!("expected a positive integer or 'auto', got '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Interp,
    Pfaffian,
    Closed,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Interp => Route::Interpolation,
            RouteArg::Pfaffian => Route::Pfaffian,
            RouteArg::Closed => Route::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    One(Suite),
}

impl FromStr for SuiteArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(SuiteArg::All)
        } else {
            s.parse().map(SuiteArg::One).map_err(|e| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("{e}; expected all, {}", names.join(", "))
            })
        }
    }
}

fn parse_set(s: &str) -> Result<IndexSet, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IndexSet::empty());
    }
    let mut elems = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let v: i64 = part
            .parse()
            .map_err(|_| format!("'{part}' is not an integer"))?;
        if v < 0 {
            return Err(format!("negative entry {v}; entries must be non-negative"));
        }
        elems.push(u32::try_from(v).map_err(|_| format!("entry {v} is too large"))?);
    }
    IndexSet::new(elems).map_err(|_| "entries must be strictly increasing".to_owned())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Lascoux coefficient ψ_I
    Psi {
        /// Comma-separated strictly increasing set, e.g. 0,3
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IndexSet,
    },
    /// Print the coefficients of LP_I(n), ascending
    Lp {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IndexSet,
        #[arg(long, value_enum, default_value_t = RouteArg::Interp)]
        route: RouteArg,
        /// Evaluate at this integer
        #[arg(long, allow_negative_numbers = true)]
        eval: Option<i64>,
    },
    /// Print the coefficients of φ(n, D), ascending, and evaluations
    Phi {
        #[arg(long = "d", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Comma-separated integers
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        eval: Vec<i64>,
    },
    /// CSV of φ(·, d), φ(0, d) and φ(-1, d) for d = 1..=DMAX
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dmax: u32,
    },
    /// Run identity checks
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
        /// Range for the selected suites (each suite has its own default)
        #[arg(long)]
        dmax: Option<u32>,
    },
}

/// Parses `argv` and runs the command, printing to the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] but writing to the given streams. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<lascoux_core::Error> for Failure {
    fn from(e: lascoux_core::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(format!("write failed: {e}"))
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let mut table = PsiTable::new();
    let mut cache = match &cli.cache {
        Some(path) => {
            Some(PsiCache::load(path, &mut table).map_err(|e| Failure::Usage(e.to_string()))?)
        }
        None => None,
    };
    let loaded = table.len();
    let shared = SharedPsiTable::new(table);

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Threads::Fixed(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Compute(format!("cannot start worker threads: {e}")))?;

    let mut doc = Vec::new();
    let code = pool.install(|| dispatch(cli, &shared, &mut doc))?;
    out.write_all(&doc)?;

    if cli.stats {
        writeln!(
            err,
            "psi cache: {loaded} entries loaded, {} hits, {} misses",
            shared.hits(),
            shared.misses()
        )?;
    }
    let table = shared.into_inner();
    let suspicious = table.non_positive();
    if !suspicious.is_empty() {
        writeln!(
            err,
            "warning: {} non-positive psi values, first {}",
            suspicious.len(),
            suspicious[0]
        )?;
    }
    if let Some(cache) = cache.as_mut() {
        cache
            .persist(&table)
            .map_err(|e| Failure::Compute(e.to_string()))?;
    }
    Ok(code)
}

fn dispatch(cli: &Cli, shared: &SharedPsiTable, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let mut engine = Engine::with_source(shared);
    match &cli.command {
        Command::Psi { set } => {
            let psi = engine.psi(set)?.to_string();
            let doc = PsiDoc {
                set: set.as_slice().to_vec(),
                psi,
            };
            match cli.format {
                Format::Plain => writeln!(out, "{}", doc.psi)?,
                Format::Json => write_json(out, &doc)?,
                Format::Csv => {
                    writeln!(out, "set,psi")?;
                    writeln!(out, "{},{}", csv_field(&set_str(&doc.set)), doc.psi)?;
                }
            }
        }
        Command::Lp { set, route, eval } => {
            if set.is_empty() {
                return Err(Failure::Usage("--set must be non-empty for lp".into()));
            }
            let lp = engine.lp_poly(set, (*route).into()).map_err(|e| match e {
                lascoux_core::Error::UnsupportedSize(_) => {
                    Failure::Usage(format!("--route closed: {e}"))
                }
                other => other.into(),
            })?;
            let evaluations = eval
                .iter()
                .map(|&n| (n, rat_str(&lp.poly.eval_int(n))))
                .collect();
            let doc = LpDoc {
                set: set.as_slice().to_vec(),
                route: lp.route.to_string(),
                coefficients: output::coeff_strs(&lp.poly),
                evaluations,
            };
            match cli.format {
                Format::Plain => {
                    writeln!(out, "LP_{set}(n) = {}", lp.poly)?;
                    writeln!(out, "coefficients: {}", doc.coefficients.join(" "))?;
                    for (n, v) in &doc.evaluations {
                        writeln!(out, "LP_{set}({n}) = {v}")?;
                    }
                }
                Format::Json => write_json(out, &doc)?,
                Format::Csv => write_coeff_csv(out, &doc.coefficients, &doc.evaluations)?,
            }
        }
        Command::Phi { d, eval } => {
            let res = engine.phi_poly(*d)?.with_evaluations(eval);
            let doc = PhiDoc {
                d: *d,
                coefficients: output::coeff_strs(&res.phi),
                evaluations: res
                    .evaluations
                    .iter()
                    .map(|(n, v)| (*n, rat_str(v)))
                    .collect(),
            };
            match cli.format {
                Format::Plain => {
                    writeln!(out, "phi(n,{d}) = {}", res.phi)?;
                    writeln!(out, "coefficients: {}", doc.coefficients.join(" "))?;
                    for (n, v) in &doc.evaluations {
                        writeln!(out, "phi({n},{d}) = {v}")?;
                    }
                }
                Format::Json => write_json(out, &doc)?,
                Format::Csv => write_coeff_csv(out, &doc.coefficients, &doc.evaluations)?,
            }
        }
        Command::Table { dmax } => {
            let rows = (1..=*dmax)
                .into_par_iter()
                .map(|d| {
                    let mut e = Engine::with_source(shared);
                    let phi = e.phi_poly(d)?.phi;
                    Ok(TableRow {
                        d,
                        coefficients: output::coeff_strs(&phi),
                        phi_at_zero: rat_str(&phi.eval_int(0)),
                        phi_at_minus_one: rat_str(&phi.eval_int(-1)),
                    })
                })
                .collect::<Result<Vec<_>, lascoux_core::Error>>()?;
            match cli.format {
                Format::Json => write_json(out, &rows)?,
                Format::Plain | Format::Csv => write_table_csv(out, &rows, *dmax)?,
            }
        }
        Command::Verify { suite, dmax } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::One(s) => vec![*s],
            };
            let reports: Vec<VerificationReport> = suites
                .par_iter()
                .map(|s| {
                    let mut e = Engine::with_source(shared);
                    s.run(&mut e, dmax.unwrap_or_else(|| s.default_range()))
                })
                .collect();
            write_reports(out, cli.format, &reports)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_json<T: serde::Serialize>(out: &mut Vec<u8>, doc: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, doc).map_err(|e| Failure::Compute(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn write_coeff_csv(
    out: &mut Vec<u8>,
    coeffs: &[String],
    evals: &std::collections::BTreeMap<i64, String>,
) -> Result<(), Failure> {
    writeln!(out, "kind,index,value")?;
    for (k, c) in coeffs.iter().enumerate() {
        writeln!(out, "coefficient,{k},{c}")?;
    }
    for (n, v) in evals {
        writeln!(out, "evaluation,{n},{v}")?;
    }
    Ok(())
}

fn write_table_csv(out: &mut Vec<u8>, rows: &[TableRow], dmax: u32) -> Result<(), Failure> {
    let mut header = vec!["d".to_owned()];
    header.extend((0..dmax).map(|k| format!("c{k}")));
    header.push("phi_at_0".into());
    header.push("phi_at_-1".into());
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let mut fields = vec![row.d.to_string()];
        for k in 0..dmax as usize {
            fields.push(
                row.coefficients
                    .get(k)
                    .cloned()
                    .unwrap_or_else(|| "0".into()),
            );
        }
        fields.push(row.phi_at_zero.clone());
        fields.push(row.phi_at_minus_one.clone());
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

fn write_reports(
    out: &mut Vec<u8>,
    format: Format,
    reports: &[VerificationReport],
) -> Result<(), Failure> {
    match format {
        Format::Json => write_json(out, &reports)?,
        Format::Csv => {
            writeln!(out, "suite,checked,failures,excluded")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.suite,
                    r.checked,
                    r.failures.len(),
                    r.excluded.len()
                )?;
            }
        }
        Format::Plain => {
            for r in reports {
                let range: Vec<String> = r.range.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = if r.passed() { "PASS" } else { "FAIL" };
                write!(
                    out,
                    "{status} {} [{}] checked={} failures={}",
                    r.suite,
                    range.join(" "),
                    r.checked,
                    r.failures.len()
                )?;
                if !r.excluded.is_empty() {
                    write!(out, " excluded={}", r.excluded.len())?;
                }
                writeln!(out)?;
                if let Some(f) = r.failures.first() {
                    let params = serde_json::to_string(&f.params).unwrap_or_default();
                    writeln!(
                        out,
                        "  first counterexample {params}: lhs = {}, rhs = {}",
                        f.lhs, f.rhs
                    )?;
                    if let Some(detail) = &f.detail {
                        writeln!(out, "  {detail}")?;
                    }
                }
            }
        }
    }
    Ok(())
}
