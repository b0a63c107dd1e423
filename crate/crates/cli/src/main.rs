//! `pascal`: build Pascal-type matrices, inspect them, and run the checkers.
//!
//! Exit status is 0 on success, 1 when a theorem-backed check fails and 2
//! on a usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pascal_core::domain::Ring;
use pascal_core::error::Error;
use pascal_core::exactmat::ExactMatrix;
use pascal_core::pascal::{BuiltMatrix, PascalFamily, PascalKind};
use pascal_core::spectra::gamma::gamma;
use pascal_core::spectra::{CheckReport, FactorizationReport};
use pascal_core::suite::{self, SuiteConfig, Target};

#[derive(Parser, Debug)]
#[command(name = "pascal", version, about = "Exact computations with symmetric Pascal matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one object: charpoly, det, gamma or matrix.
    Compute(Options),
    /// Run a checker and stream one report per instance.
    Verify(Options),
}

#[derive(Args, Debug)]
struct Options {
    /// What to compute, or which checker to run (`all` runs every checker).
    target: String,
    /// Matrix size, or the argument of γ.
    #[arg(long)]
    n: Option<u64>,
    /// Prime modulus; without it matrices are built over Z.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Matrix family: pascal, reduced2, reduced3, T, L, Ltilde, shifted:K, shifted-unit:K.
    #[arg(long, default_value = "pascal")]
    family: String,
    #[arg(long)]
    max_n: Option<u64>,
    #[arg(long)]
    max_q: Option<u64>,
    #[arg(long)]
    max_k: Option<u64>,
    /// Comma-separated prime powers.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for independent check instances.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

/// A failure that maps onto one of the documented exit codes.
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(opts) => compute(opts).map(|()| true),
        Command::Verify(opts) => verify(opts),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: pascal (compute|verify) <target> [options]; see --help");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn open_output(opts: &Options) -> Result<Box<dyn Write>, Failure> {
    Ok(match &opts.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn require_n(opts: &Options) -> Result<u64, Failure> {
    opts.n
        .ok_or_else(|| Failure::Usage(format!("compute {} needs --n", opts.target)))
}

fn family(opts: &Options) -> Result<PascalFamily, Failure> {
    let kind: PascalKind = opts.family.parse()?;
    let n = usize::try_from(require_n(opts)?)
        .map_err(|_| Failure::Usage("--n is too large".into()))?;
    Ok(PascalFamily::new(kind, n, opts.modulus))
}

/// A computed object in all three output encodings.
struct Rendered {
    json: Value,
    csv: Vec<Vec<String>>,
    plain: String,
}

fn compute(opts: &Options) -> Result<(), Failure> {
    let rendered = match opts.target.as_str() {
        "gamma" => {
            let g = gamma(require_n(opts)?);
            Rendered {
                json: json!({ "gamma": g.gamma, "gamma2": g.gamma2 }),
                csv: vec![
                    vec!["gamma".into(), "gamma2".into()],
                    vec![g.gamma.to_string(), g.gamma2.to_string()],
                ],
                plain: format!("gamma={} gamma2={}\n", g.gamma, g.gamma2),
            }
        }
        "det" => {
            let det = match family(opts)?.build()? {
                BuiltMatrix::Z(m) => det_string(&m)?,
                BuiltMatrix::Fp(m) => det_string(&m)?,
            };
            Rendered {
                json: Value::String(det.clone()),
                csv: vec![vec!["det".into()], vec![det.clone()]],
                plain: format!("{det}\n"),
            }
        }
        "charpoly" => {
            let fam = family(opts)?;
            match fam.build()? {
                BuiltMatrix::Z(m) => charpoly_rendered(&fam, &m)?,
                BuiltMatrix::Fp(m) => charpoly_rendered(&fam, &m)?,
            }
        }
        "matrix" => {
            let (json, rows) = match family(opts)?.build()? {
                BuiltMatrix::Z(m) => (m.to_record(), m.display_rows()),
                BuiltMatrix::Fp(m) => (m.to_record(), m.display_rows()),
            };
            let csv = json
                .entries
                .chunks(json.cols.max(1))
                .map(|row| row.to_vec())
                .collect();
            Rendered {
                json: serde_json::to_value(&json).expect("record serializes"),
                csv,
                plain: rows,
            }
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown compute target {other:?} (expected charpoly, det, gamma or matrix)"
            )))
        }
    };
    let mut out = open_output(opts)?;
    match opts.format {
        Format::Json => writeln!(out, "{}", rendered.json)?,
        Format::Plain => write!(out, "{}", rendered.plain)?,
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(&mut out);
            for row in &rendered.csv {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

fn det_string<R: Ring>(m: &ExactMatrix<R>) -> Result<String, Failure> {
    Ok(m.ring().format(&m.det()?))
}

fn charpoly_rendered<R: Ring>(fam: &PascalFamily, m: &ExactMatrix<R>) -> Result<Rendered, Failure> {
    let chi = m.charpoly()?;
    let factors = FactorizationReport::of(&chi)?;
    let coefficients = chi.to_strings();
    let csv = std::iter::once(vec!["degree".to_string(), "coefficient".to_string()])
        .chain(
            coefficients
                .iter()
                .enumerate()
                .map(|(d, c)| vec![d.to_string(), c.clone()]),
        )
        .collect();
    Ok(Rendered {
        json: json!({
            "family": fam.kind.to_string(),
            "n": fam.n,
            "domain": m.ring().tag().to_string(),
            "coefficients": coefficients,
            "factorization": factors.to_json(),
        }),
        csv,
        plain: format!("{chi}\n"),
    })
}

fn verify(opts: &Options) -> Result<bool, Failure> {
    let target: Target = opts.target.parse()?;
    let cfg = SuiteConfig {
        max_n: opts.max_n,
        max_q: opts.max_q,
        max_k: opts.max_k,
        primes: opts.primes.clone(),
    };
    let threads = opts.jobs.map(|j| j as usize);
    let reports = suite::run_with_threads(target, &cfg, threads)?;
    let mut out = open_output(opts)?;
    match opts.format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Plain => {
            for r in &reports {
                writeln!(out, "{}", plain_line(r))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["check", "params", "verdict"])?;
            for r in &reports {
                w.write_record([r.check.as_str(), &params_string(r), verdict_name(r)])?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(!reports.iter().any(CheckReport::is_theorem_failure))
}

fn verdict_name(r: &CheckReport) -> &'static str {
    match r.verdict {
        pascal_core::spectra::Verdict::Pass => "pass",
        pascal_core::spectra::Verdict::Fail => "fail",
        pascal_core::spectra::Verdict::NotApplicable => "not-applicable",
    }
}

/// Parameters as `key=value` pairs joined by `;`, strings unquoted.
fn params_string(r: &CheckReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn plain_line(r: &CheckReport) -> String {
    let mut line = format!("{:<14} {:<15} {}", verdict_name(r), r.check, params_string(r));
    if let Some(w) = r.witness.as_ref().filter(|_| !r.passed()) {
        line.push_str(&format!("  witness={w}"));
    }
    line
}
