//! Command-line front end. Exit codes: 0 success, 1 usage or parse error,
//! 2 precondition failure, 3 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::rational::format_rational;
use crate::exactalg::{ExponentVector, LaurentPolynomial};
use crate::formulas::{bernstein_pair, minkowski_of, product_over_roots, sum_over_roots, SystemInstance};
use crate::parse::{parse_job_json, parse_laurent};
use crate::polytope::{is_developed, mixed_volume_ie};
use crate::residue::log_form_residue;
use crate::symbol::{symbol_factored, vertex_symbol_input};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::IndexOutOfRange { .. }
        | Error::ZeroDenominator(_)
        | Error::DimensionMismatch { .. }
        | Error::CountMismatch { .. } => EXIT_USAGE,
        Error::Consistency(_) => EXIT_CONSISTENCY,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Parser, Debug)]
#[command(name = "newton-roots", version, about = "Products and sums over the roots of developed Laurent systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Number of variables t1..tn.
    #[arg(long)]
    n: Option<usize>,
    /// The n equations; write one starting with '-' as `--system=-t1+2`.
    #[arg(long, num_args = 1..)]
    system: Vec<String>,
    /// The function f0 (default 1).
    #[arg(long, allow_hyphen_values = true)]
    f0: Option<String>,
    /// JSON job file with n, system and optionally f0.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether the Newton polytopes form a developed collection.
    Developed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Mixed volume by inclusion–exclusion and by the sum formula.
    Mv {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Combinatorial coefficient of every vertex of the Minkowski sum.
    Coeffs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Vertex symbol of a monomial f0.
    Symbol {
        #[command(flatten)]
        input: Input,
        /// Vertex of the Minkowski sum, e.g. "1,1".
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
        #[command(flatten)]
        output: Output,
    },
    /// Residue of f0·J/(f1⋯fn) at a vertex of the Newton polytope of f1⋯fn.
    Residue {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
        #[command(flatten)]
        output: Output,
    },
    /// Product of a monomial f0 over the roots.
    Product {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Sum of f0 over the roots.
    Sum {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Run the oracle equivalence suites.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Cases per suite (defaults per suite otherwise).
        #[arg(long)]
        cases: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

struct Job {
    n: usize,
    system: Vec<LaurentPolynomial>,
    f0: LaurentPolynomial,
}

impl Input {
    fn load(&self) -> Result<Job> {
        let (n, system, f0) = match &self.json {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse { pos: 0, msg: format!("{}: {e}", path.display()) })?;
                let (n, mut system, f0) = parse_job_json(&text)?;
                if !self.system.is_empty() {
                    system = self.system.iter().map(|s| parse_laurent(s, n)).collect::<Result<_>>()?;
                }
                (n, system, f0)
            }
            None => {
                let n = self.n.ok_or_else(|| Error::Parse { pos: 0, msg: "--n or --json is required".into() })?;
                if n == 0 {
                    return Err(Error::Parse { pos: 0, msg: "n must be positive".into() });
                }
                let system = self.system.iter().map(|s| parse_laurent(s, n)).collect::<Result<_>>()?;
                (n, system, None)
            }
        };
        if system.len() != n {
            return Err(Error::CountMismatch { expected: n, found: system.len() });
        }
        let f0 = match &self.f0 {
            Some(s) => parse_laurent(s, n)?,
            None => f0.unwrap_or_else(|| LaurentPolynomial::one(n)),
        };
        Ok(Job { n, system, f0 })
    }
}

fn parse_vertex(s: &str, n: usize) -> Result<ExponentVector> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let v = inner
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad vertex {s:?}") }))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    Ok(ExponentVector::new(v))
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Report as text and as JSON.
struct Report {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Report { text, json, code: EXIT_OK }
    }
}

fn execute(cmd: &Command) -> Result<(Report, &Output)> {
    Ok(match cmd {
        Command::Developed { input, output } => {
            let job = input.load()?;
            let d = is_developed(&minkowski_of(&job.system)?);
            let mut text = d.developed.to_string();
            if let Some(w) = &d.witness {
                text.push_str(&format!("\nwitness w={}", tuple(w)));
            }
            (Report::ok(text, json!({ "developed": d.developed, "witness": d.witness })), output)
        }
        Command::Mv { input, output } => {
            let job = input.load()?;
            let ms = minkowski_of(&job.system)?;
            let mv = mixed_volume_ie(ms.summands())?;
            let sys = SystemInstance::new(job.system)?;
            let (by_sum, by_volume) = bernstein_pair(&sys)?;
            let agree = by_sum == crate::exactalg::Rational::from_integer(by_volume.clone());
            let text = format!(
                "mixed volume: {mv}\nbernstein number: {}\n{}",
                format_rational(&by_sum),
                if agree { "agree" } else { "DISAGREE" }
            );
            let json = json!({
                "mixed_volume": mv.to_string(),
                "bernstein_number": format_rational(&by_sum),
                "agree": agree,
            });
            (Report { text, json, code: if agree { EXIT_OK } else { EXIT_CONSISTENCY } }, output)
        }
        Command::Coeffs { input, output } => {
            let job = input.load()?;
            let sys = SystemInstance::new(job.system)?;
            let rows: Vec<(Vec<i64>, i64)> =
                sys.vertices().into_iter().map(|v| v.to_vec()).zip(sys.coefficients().iter().copied()).collect();
            let text = rows.iter().map(|(v, c)| format!("{} {c}", tuple(v))).collect::<Vec<_>>().join("\n");
            let json = json!(rows.iter().map(|(v, c)| json!({ "vertex": v, "c": c })).collect::<Vec<_>>());
            (Report::ok(text, json), output)
        }
        Command::Symbol { input, vertex, output } => {
            let job = input.load()?;
            let a = parse_vertex(vertex, job.n)?;
            let sys = SystemInstance::new(job.system)?;
            let v = sys.vertex_index(&a)?;
            let f0 = job.f0.as_monomial().ok_or(Error::NotMonomial)?;
            let inp = vertex_symbol_input(&f0, sys.system(), sys.minkowski(), v)?;
            let fs = symbol_factored(&inp);
            let value = fs.evaluate();
            let mut factored: Vec<String> = fs
                .factors
                .iter()
                .map(|(c, e)| format!("({})^({e})", format_rational(c)))
                .collect();
            if factored.is_empty() {
                factored.push("1".into());
            }
            let text = format!(
                "value: {}\nfactored: {}{}",
                format_rational(&value),
                if fs.negative { "-" } else { "" },
                factored.join("*")
            );
            (Report::ok(text, json!({ "value": format_rational(&value), "factored": fs })), output)
        }
        Command::Residue { input, vertex, output } => {
            let job = input.load()?;
            let a = parse_vertex(vertex, job.n)?;
            let r = log_form_residue(&job.f0, &job.system, &a)?;
            (Report::ok(format_rational(&r), json!({ "value": format_rational(&r) })), output)
        }
        Command::Product { input, output } => {
            let job = input.load()?;
            let sys = SystemInstance::new(job.system)?;
            let f0 = job.f0.as_monomial().ok_or(Error::NotMonomial)?;
            let r = product_over_roots(&f0, &sys)?;
            (Report::ok(format_rational(&r), json!({ "value": format_rational(&r) })), output)
        }
        Command::Sum { input, output } => {
            let job = input.load()?;
            let sys = SystemInstance::new(job.system)?;
            let r = sum_over_roots(&job.f0, &sys)?;
            (Report::ok(format_rational(&r), json!({ "value": format_rational(&r) })), output)
        }
        Command::Verify { seed, cases, output } => {
            let reports = verify::run_all(*seed, *cases);
            let mut text = format!("{:<20} {:>6} {:>6} {:>9} {:>10}  status", "suite", "cases", "passed", "resampled", "ms");
            for r in &reports {
                text.push_str(&format!(
                    "\n{:<20} {:>6} {:>6} {:>9} {:>10}  {}",
                    r.name,
                    r.cases,
                    r.passed,
                    r.resampled,
                    r.elapsed.as_millis(),
                    if r.ok() { "PASS" } else { "FAIL" }
                ));
                for f in r.failures.iter().take(5) {
                    text.push_str(&format!("\n    {f}"));
                }
            }
            let code = if reports.iter().all(verify::SuiteReport::ok) { EXIT_OK } else { EXIT_CONSISTENCY };
            (Report { text, json: json!({ "seed": seed, "suites": reports }), code }, output)
        }
    })
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, output)) => {
            let body = match output.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable report"),
            } + "\n";
            let written = match &output.out {
                Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
