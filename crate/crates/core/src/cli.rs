//! Command-line front end: argument parsing, parameter grids, table
//! rendering and exit statuses.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

use crate::error::Error;
use crate::radii::{solve_radius, RadiusProblem};
use crate::verify::{fuzz_theorem, sharpness_report, FuzzOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_SOLVER: i32 = 2;
pub const EXIT_FAILS: i32 = 3;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "BOHR_LAB_THREADS";

const RADIUS_COLUMNS: &str = "Columns: theorem, beta, alpha, k, n, r, half_width, iterations.";
const SHARPNESS_COLUMNS: &str =
    "Columns: theorem, beta, alpha, k, n, r, lhs, rhs, gap, truncation.";
const VERIFY_COLUMNS: &str = "Columns: theorem, beta, alpha, k, n, radius, r_check, samples, \
holds, fails, inconclusive, dominance_violations, worst_margin, worst_seed, witness_seed, \
witness_margin, witness_r.";

#[derive(Debug, Parser)]
#[command(
    name = "bohr-lab",
    version,
    about = "Certified Bohr-type radii for harmonic mapping classes",
    after_help = "Parameters accept a single value or a start:stop:step grid.\n\
                  BOHR_LAB_THREADS caps the number of worker threads.\n\
                  Exit status: 0 success, 1 invalid input, 2 solver failure, 3 a sample fails."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the radius equation at one parameter point.
    #[command(after_help = RADIUS_COLUMNS)]
    Radius(CommonArgs),
    /// Solve the radius equation over a parameter grid, one row per point.
    #[command(after_help = RADIUS_COLUMNS)]
    Table(CommonArgs),
    /// Fuzz the theorem with random admissible models at 0.9 times the radius.
    #[command(after_help = VERIFY_COLUMNS)]
    Verify(VerifyArgs),
    /// Evaluate the extremal function at the radius and report the gap.
    #[command(after_help = SHARPNESS_COLUMNS)]
    Sharpness(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremTag,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    /// Exponent N of the bounded analytic theorem.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Truncation of sampled models.
    #[arg(long, default_value_t = 2000)]
    pub truncation: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremTag {
    T31,
    T32,
    T33,
    T34,
    T35,
    T36,
    Ta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Radius,
    Table,
    Verify,
    Sharpness,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub problems: Vec<RadiusProblem>,
    pub tol: f64,
    pub truncation: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub samples: usize,
}

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Library(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_solver_error() => EXIT_SOLVER,
            _ => EXIT_VALIDATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "invalid input: {msg}"),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange(msg) => CliError::Validation(msg),
            other => CliError::Library(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Expands `x` or `start:stop:step` into its points. Points are snapped to
/// 13 significant digits so `0.1:0.9:0.2` yields `0.3`, not
/// `0.30000000000000004`.
pub fn parse_grid(flag: &str, text: &str) -> Result<Vec<f64>, CliError> {
    let number = |s: &str| -> Result<f64, CliError> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| invalid(format!("--{flag}: cannot parse '{s}' as a number")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(invalid(format!("--{flag}: value must be finite, got '{s}'")))
        }
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![number(single)?]),
        [start, stop, step] => {
            let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
            if !(step > 0.0) || stop < start {
                return Err(invalid(format!(
                    "--{flag}: grid needs start <= stop and step > 0, got '{text}'"
                )));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            if count > 1_000_000 {
                return Err(invalid(format!("--{flag}: grid has more than 10^6 points")));
            }
            Ok((0..count)
                .map(|i| {
                    let v = start + i as f64 * step;
                    format!("{v:.12e}").parse().unwrap_or(v)
                })
                .collect())
        }
        _ => Err(invalid(format!(
            "--{flag}: expected a value or start:stop:step, got '{text}'"
        ))),
    }
}

fn parse_int_grid(flag: &str, text: &str) -> Result<Vec<u32>, CliError> {
    parse_grid(flag, text)?
        .into_iter()
        .map(|v| {
            if v.fract() == 0.0 && (0.0..=u32::MAX as f64).contains(&v) {
                Ok(v as u32)
            } else {
                Err(invalid(format!("--{flag}: expected a nonnegative integer, got {v}")))
            }
        })
        .collect()
}

fn required<'a>(flag: &str, value: &'a Option<String>, theorem: TheoremTag) -> Result<&'a str, CliError> {
    value
        .as_deref()
        .ok_or_else(|| invalid(format!("--{flag} is required for {}", tag_name(theorem))))
}

fn tag_name(tag: TheoremTag) -> &'static str {
    match tag {
        TheoremTag::T31 => "t31",
        TheoremTag::T32 => "t32",
        TheoremTag::T33 => "t33",
        TheoremTag::T34 => "t34",
        TheoremTag::T35 => "t35",
        TheoremTag::T36 => "t36",
        TheoremTag::Ta => "ta",
    }
}

/// Builds the list of problems over the Cartesian product of the grids and
/// validates every point.
fn expand_problems(args: &CommonArgs) -> Result<Vec<RadiusProblem>, CliError> {
    let tag = args.theorem;
    let allowed: &[&str] = match tag {
        TheoremTag::T31 | TheoremTag::T32 => &["beta"],
        TheoremTag::T33 | TheoremTag::T34 => &["alpha"],
        TheoremTag::T35 | TheoremTag::T36 => &["k", "alpha"],
        TheoremTag::Ta => &["n"],
    };
    for (flag, value) in [("beta", &args.beta), ("alpha", &args.alpha), ("k", &args.k), ("n", &args.n)] {
        if value.is_some() && !allowed.contains(&flag) {
            return Err(invalid(format!("--{flag} does not apply to {}", tag_name(tag))));
        }
    }
    let problems: Vec<RadiusProblem> = match tag {
        TheoremTag::T31 | TheoremTag::T32 => parse_grid("beta", required("beta", &args.beta, tag)?)?
            .into_iter()
            .map(|beta| {
                if tag == TheoremTag::T31 {
                    RadiusProblem::T31 { beta }
                } else {
                    RadiusProblem::T32 { beta }
                }
            })
            .collect(),
        TheoremTag::T33 | TheoremTag::T34 => parse_grid("alpha", required("alpha", &args.alpha, tag)?)?
            .into_iter()
            .map(|alpha| {
                if tag == TheoremTag::T33 {
                    RadiusProblem::T33 { alpha }
                } else {
                    RadiusProblem::T34 { alpha }
                }
            })
            .collect(),
        TheoremTag::T35 | TheoremTag::T36 => {
            let ks = parse_int_grid("k", required("k", &args.k, tag)?)?;
            let alphas = parse_grid("alpha", required("alpha", &args.alpha, tag)?)?;
            ks.iter()
                .flat_map(|&k| {
                    alphas.iter().map(move |&alpha| {
                        if tag == TheoremTag::T35 {
                            RadiusProblem::T35 { k, alpha }
                        } else {
                            RadiusProblem::T36 { k, alpha }
                        }
                    })
                })
                .collect()
        }
        TheoremTag::Ta => parse_int_grid("n", required("n", &args.n, tag)?)?
            .into_iter()
            .map(|n| RadiusProblem::TA { n })
            .collect(),
    };
    for p in &problems {
        p.validate()?;
    }
    Ok(problems)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, common, seed, samples) = match cli.command {
            Command::Radius(c) => (CommandKind::Radius, c, 0, 0),
            Command::Table(c) => (CommandKind::Table, c, 0, 0),
            Command::Sharpness(c) => (CommandKind::Sharpness, c, 0, 0),
            Command::Verify(v) => (CommandKind::Verify, v.common, v.seed, v.samples),
        };
        if !(common.tol > 0.0 && common.tol < 1.0) {
            return Err(invalid(format!("--tol must lie in (0, 1), got {}", common.tol)));
        }
        if common.truncation < 2 {
            return Err(invalid(format!(
                "--truncation must be >= 2, got {}",
                common.truncation
            )));
        }
        let problems = expand_problems(&common)?;
        match command {
            CommandKind::Radius if problems.len() != 1 => {
                return Err(invalid("radius takes single parameter values; use table for grids"));
            }
            CommandKind::Verify | CommandKind::Sharpness
                if problems.iter().any(|p| matches!(p, RadiusProblem::TA { .. })) =>
            {
                return Err(invalid("ta has no harmonic class to verify or test for sharpness"));
            }
            CommandKind::Verify if samples == 0 => {
                return Err(invalid("--samples must be >= 1"));
            }
            _ => {}
        }
        Ok(RunConfig {
            command,
            problems,
            tol: common.tol,
            truncation: common.truncation,
            format: common.format,
            out: common.out,
            seed,
            samples,
        })
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Empty,
    Text(String),
    Int(i64),
    Float(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) if x.is_finite() => format!("{x:.11e}"),
            Cell::Float(x) => x.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Empty => Value::Null,
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        }
    }

    fn parse_csv(field: &str) -> Cell {
        if field.is_empty() {
            Cell::Empty
        } else if let Ok(i) = field.parse::<i64>() {
            Cell::Int(i)
        } else if let Ok(x) = field.parse::<f64>() {
            Cell::Float(x)
        } else {
            Cell::Text(field.to_string())
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Float(x) => Some(x),
            Cell::Int(i) => Some(i as f64),
            _ => None,
        }
    }
}

/// Rows with a fixed header, rendered as CSV or JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn get(&self, row: usize, column: &str) -> Option<&Cell> {
        let j = self.columns.iter().position(|c| c == column)?;
        self.rows.get(row)?.get(j)
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| CliError::Io(std::io::Error::other(e));
        writer.write_record(&self.columns).map_err(csv_err)?;
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::csv))
                .map_err(csv_err)?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn from_csv(text: &str) -> Result<Self, CliError> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let columns = reader
            .headers()
            .map_err(|e| invalid(format!("csv header: {e}")))?
            .iter()
            .map(str::to_string)
            .collect();
        let rows = reader
            .records()
            .map(|rec| {
                rec.map(|r| r.iter().map(Cell::parse_csv).collect())
                    .map_err(|e| invalid(format!("csv record: {e}")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { columns, rows })
    }

    fn row_json(&self, row: &[Cell]) -> String {
        let fields: Vec<String> = self
            .columns
            .iter()
            .zip(row)
            .map(|(c, v)| format!("{}:{}", Value::String(c.clone()), v.json()))
            .collect();
        format!("{{{}}}", fields.join(","))
    }

    /// A JSON array with one object per row, keys in column order.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("  {}", self.row_json(r))).collect();
        if rows.is_empty() {
            "[]\n".to_string()
        } else {
            format!("[\n{}\n]\n", rows.join(",\n"))
        }
    }

    /// The single row as one JSON object.
    pub fn to_json_record(&self) -> String {
        match self.rows.as_slice() {
            [row] => format!("{}\n", self.row_json(row)),
            _ => self.to_json(),
        }
    }
}

fn parameter_cells(p: &RadiusProblem) -> Vec<Cell> {
    let (beta, alpha, k, n) = match *p {
        RadiusProblem::T31 { beta } | RadiusProblem::T32 { beta } => {
            (Cell::Float(beta), Cell::Empty, Cell::Empty, Cell::Empty)
        }
        RadiusProblem::T33 { alpha } | RadiusProblem::T34 { alpha } => {
            (Cell::Empty, Cell::Float(alpha), Cell::Empty, Cell::Empty)
        }
        RadiusProblem::T35 { k, alpha } | RadiusProblem::T36 { k, alpha } => {
            (Cell::Empty, Cell::Float(alpha), Cell::Int(k.into()), Cell::Empty)
        }
        RadiusProblem::TA { n } => (Cell::Empty, Cell::Empty, Cell::Empty, Cell::Int(n.into())),
    };
    vec![Cell::Text(p.tag().to_string()), beta, alpha, k, n]
}

const PARAMETER_COLUMNS: [&str; 5] = ["theorem", "beta", "alpha", "k", "n"];

fn with_parameters(extra: &[&str]) -> Table {
    let mut columns = PARAMETER_COLUMNS.to_vec();
    columns.extend_from_slice(extra);
    Table::new(&columns)
}

/// Maps rows in parallel, keeping input order and reporting the first
/// error in input order.
fn map_rows<F>(problems: &[RadiusProblem], f: F) -> Result<Vec<Vec<Cell>>, CliError>
where
    F: Fn(&RadiusProblem) -> Result<Vec<Cell>, CliError> + Sync,
{
    let results: Vec<_> = problems.par_iter().map(|p| f(p)).collect();
    results.into_iter().collect()
}

/// The computed report and whether any verification sample failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub any_fails: bool,
}

impl Outcome {
    pub fn exit_status(&self) -> i32 {
        if self.any_fails {
            EXIT_FAILS
        } else {
            EXIT_OK
        }
    }
}

/// Runs a validated configuration on the current rayon pool.
pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut any_fails = false;
    let table = match config.command {
        CommandKind::Radius | CommandKind::Table => {
            let mut table = with_parameters(&["r", "half_width", "iterations"]);
            table.rows = map_rows(&config.problems, |p| {
                let root = solve_radius(p, config.tol)?;
                let mut row = parameter_cells(p);
                row.extend([
                    Cell::Float(root.r),
                    Cell::Float(root.half_width),
                    Cell::Int(root.iterations.into()),
                ]);
                Ok(row)
            })?;
            table
        }
        CommandKind::Sharpness => {
            let mut table = with_parameters(&["r", "lhs", "rhs", "gap", "truncation"]);
            table.rows = map_rows(&config.problems, |p| {
                let rep = sharpness_report(p, config.tol)?;
                let mut row = parameter_cells(p);
                row.extend([
                    Cell::Float(rep.r),
                    Cell::Float(rep.lhs),
                    Cell::Float(rep.rhs),
                    Cell::Float(rep.gap),
                    Cell::Int(rep.truncation as i64),
                ]);
                Ok(row)
            })?;
            table
        }
        CommandKind::Verify => {
            let mut table = with_parameters(&[
                "radius",
                "r_check",
                "samples",
                "holds",
                "fails",
                "inconclusive",
                "dominance_violations",
                "worst_margin",
                "worst_seed",
                "witness_seed",
                "witness_margin",
                "witness_r",
            ]);
            let options = FuzzOptions {
                samples: config.samples,
                seed: config.seed,
                truncation: config.truncation,
                tol: config.tol,
                membership_filter: false,
            };
            // Grid points run in order; each campaign is parallel over seeds.
            for p in &config.problems {
                let s = fuzz_theorem(p, &options)?;
                any_fails |= s.fails > 0;
                let (wseed, wmargin, wr) = match &s.witness {
                    Some((seed, v)) => (
                        Cell::Int(*seed as i64),
                        Cell::Float(v.margin),
                        Cell::Float(v.at_r),
                    ),
                    None => (Cell::Empty, Cell::Empty, Cell::Empty),
                };
                let mut row = parameter_cells(p);
                row.extend([
                    Cell::Float(s.radius),
                    Cell::Float(s.r_check),
                    Cell::Int(s.samples as i64),
                    Cell::Int(s.holds as i64),
                    Cell::Int(s.fails as i64),
                    Cell::Int(s.inconclusive as i64),
                    Cell::Int(s.dominance_violations as i64),
                    Cell::Float(s.worst_margin),
                    Cell::Int(s.worst_seed as i64),
                    wseed,
                    wmargin,
                    wr,
                ]);
                table.rows.push(row);
            }
            table
        }
    };
    Ok(Outcome { table, any_fails })
}

/// Renders a report in the configured format.
pub fn render(config: &RunConfig, table: &Table) -> Result<String, CliError> {
    match config.format {
        Format::Csv => table.to_csv(),
        Format::Json if config.command == CommandKind::Radius => Ok(table.to_json_record()),
        Format::Json => Ok(table.to_json()),
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| invalid(format!("{THREADS_ENV} must be a positive integer, got '{value}'")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))
}

/// Runs a configuration and writes the report to `--out` or `stdout`.
/// Returns the exit status.
pub fn run<W: Write>(config: &RunConfig, stdout: &mut W) -> Result<i32, CliError> {
    let pool = thread_pool()?;
    let outcome = pool.install(|| execute(config))?;
    let text = render(config, &outcome.table)?;
    match &config.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(outcome.exit_status())
}

/// Full entry point: parses `args` (including the program name), runs and
/// returns the exit status. Help and version go to `stdout`.
pub fn main_with<I, T, W, E>(args: I, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_VALIDATION
                }
            };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|config| run(&config, stdout));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig, CliError> {
        let mut full = vec!["bohr-lab"];
        full.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(full).expect("parses"))
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("beta", "0.5").unwrap(), vec![0.5]);
        assert_eq!(
            parse_grid("beta", "0.1:0.9:0.2").unwrap(),
            vec![0.1, 0.3, 0.5, 0.7, 0.9]
        );
        assert_eq!(parse_int_grid("n", "1:8:1").unwrap(), (1..=8).collect::<Vec<_>>());
        assert!(parse_grid("beta", "0.9:0.1:0.2").is_err());
        assert!(parse_grid("beta", "0.1:0.9:0").is_err());
        assert!(parse_grid("beta", "x").is_err());
        assert!(parse_grid("beta", "1:2").is_err());
        assert!(parse_int_grid("k", "1.5").is_err());
    }

    #[test]
    fn validation_cites_ranges() {
        let msg = |args: &[&str]| config(args).unwrap_err().to_string();
        assert!(msg(&["radius", "--theorem", "t31", "--beta", "1.0"]).contains("(0, 1)"));
        assert!(msg(&["radius", "--theorem", "t34", "--alpha", "1.0"]).contains("[0, 1)"));
        assert!(msg(&["radius", "--theorem", "t35", "--k", "2", "--alpha", "0.4"]).contains("1/k"));
        assert!(msg(&["radius", "--theorem", "t33"]).contains("--alpha is required"));
        assert!(msg(&["radius", "--theorem", "t31", "--beta", "0.5", "--alpha", "0.1"])
            .contains("does not apply"));
        assert!(msg(&["radius", "--theorem", "ta", "--n", "0"]).contains(">= 1"));
        assert!(msg(&["radius", "--theorem", "ta", "--n", "1:3:1"]).contains("table"));
        assert!(msg(&["sharpness", "--theorem", "ta", "--n", "1"]).contains("harmonic"));
        assert!(msg(&["table", "--theorem", "t32", "--beta", "0.1:1.1:0.5"]).contains("(0, 1)"));
    }

    #[test]
    fn product_grid_order() {
        let c = config(&["table", "--theorem", "t36", "--k", "1:2:1", "--alpha", "1:2:1"]).unwrap();
        assert_eq!(
            c.problems,
            vec![
                RadiusProblem::T36 { k: 1, alpha: 1.0 },
                RadiusProblem::T36 { k: 1, alpha: 2.0 },
                RadiusProblem::T36 { k: 2, alpha: 1.0 },
                RadiusProblem::T36 { k: 2, alpha: 2.0 },
            ]
        );
    }

    #[test]
    fn cell_formats() {
        assert_eq!(Cell::Float(0.2).csv(), "2.00000000000e-1");
        assert_eq!(Cell::Float(0.1 + 0.2).json().to_string(), "0.30000000000000004");
        assert_eq!(Cell::Float(f64::INFINITY).json(), Value::Null);
        assert_eq!(Cell::parse_csv(""), Cell::Empty);
        assert_eq!(Cell::parse_csv("7"), Cell::Int(7));
        assert_eq!(Cell::parse_csv("t31"), Cell::Text("t31".into()));
    }

    #[test]
    fn exit_statuses() {
        let table = Table::new(&["theorem"]);
        let ok = Outcome { table: table.clone(), any_fails: false };
        let fails = Outcome { table, any_fails: true };
        assert_eq!(ok.exit_status(), EXIT_OK);
        assert_eq!(fails.exit_status(), EXIT_FAILS);
        let solver = CliError::Library(Error::SignAmbiguous { r: 0.2, half_width: 1e-16 });
        assert_eq!(solver.exit_code(), EXIT_SOLVER);
        let no_bracket = CliError::Library(Error::NoBracket {
            left_lo: 0.0,
            left_hi: 1.0,
            right_lo: 0.0,
            right_hi: 1.0,
        });
        assert_eq!(no_bracket.exit_code(), EXIT_SOLVER);
        assert_eq!(CliError::from(Error::OutOfRange("x".into())).exit_code(), EXIT_VALIDATION);
    }

    #[test]
    fn table_json_layout() {
        let mut t = Table::new(&["theorem", "r"]);
        assert_eq!(t.to_json(), "[]\n");
        t.rows.push(vec![Cell::Text("t31".into()), Cell::Float(0.2)]);
        assert_eq!(t.to_json_record(), "{\"theorem\":\"t31\",\"r\":0.2}\n");
        assert_eq!(t.to_json(), "[\n  {\"theorem\":\"t31\",\"r\":0.2}\n]\n");
    }
}
