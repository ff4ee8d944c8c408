//! `defect`: invariants, tensor-product checks and oracle comparisons for
//! algebras given in a presentation file.

mod render;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use defect_core::presentation::parse_field;
use defect_core::{
    build_model, check_nontrivial, oracle_report, parse_presentation_file, report, run_checks, Field,
    InvariantConfig, InvariantError, OracleError, PresentationError, PresentationFile, TensorSetup,
    TheoremCheckResult, TheoremError, TheoremFilter, DEFAULT_SEED,
};

#[derive(Parser, Debug)]
#[command(name = "defect", version, about = "Local invariants of algebras and their tensor products")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random linear forms used to compute the type.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Override the field declared in the file: `Q` or `Fp:p`.
    #[arg(long, global = true, value_parser = field_arg)]
    field: Option<Field>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariant report of one algebra.
    Invariants { file: PathBuf, name: String },
    /// Check the tensor-product formulas for two algebras over a common base.
    Check {
        file: PathBuf,
        a: String,
        b: String,
        /// all, dim, depth, codepth, idd, type, cid, codim, equiv, flat or nontrivial.
        #[arg(long, default_value = "all", value_parser = theorem_arg)]
        theorem: Theorem,
    },
    /// Compare the pipeline report with the dense-matrix oracle.
    Oracle { file: PathBuf, name: String },
}

#[derive(Clone, Copy, Debug)]
enum Theorem {
    Suite(TheoremFilter),
    Nontrivial,
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).ok_or_else(|| format!("expected `Q` or `Fp:p` with p prime, got `{s}`"))
}

fn theorem_arg(s: &str) -> Result<Theorem, String> {
    if s == "nontrivial" {
        return Ok(Theorem::Nontrivial);
    }
    s.parse().map(Theorem::Suite).map_err(|e: TheoremError| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<PresentationError> for Failure {
    fn from(e: PresentationError) -> Self {
        let code = match e {
            PresentationError::Parse { .. } => 2,
            PresentationError::CertificateMissing(_) => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Presentation(p) => p.into(),
            other => Failure { code: 1, message: other.to_string() },
        }
    }
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Presentation(p) => p.into(),
            TheoremError::Invariant(i) => i.into(),
            TheoremError::CertificateMissing(_) | TheoremError::SmoothnessMissing(_) => {
                Failure { code: 4, message: e.to_string() }
            }
            other => Failure { code: 1, message: other.to_string() },
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NotArtinian(_) => Failure { code: 5, message: e.to_string() },
            OracleError::Presentation(p) => p.into(),
            OracleError::Invariant(i) => i.into(),
        }
    }
}

fn load(path: &PathBuf, field: Option<Field>) -> Result<PresentationFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })?;
    Ok(parse_presentation_file(&text, field)?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Output text and whether the command succeeded.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let cfg = InvariantConfig::with_seed(cli.common.seed);
    match &cli.command {
        Command::Invariants { file, name } => {
            let a = load(file, cli.common.field)?.get(name)?;
            let r = report(&a.validate()?, &cfg)?;
            let out = if cli.common.json { json(&r) } else { render::report_table(&a, &r) };
            Ok((out, true))
        }
        Command::Check { file, a, b, theorem } => {
            let f = load(file, cli.common.field)?;
            let (a, b) = (f.get(a)?, f.get(b)?);
            let results: Vec<TheoremCheckResult> = match theorem {
                Theorem::Nontrivial => vec![check_nontrivial(&a, &b, None, None, cfg.seed)?],
                Theorem::Suite(filter) => {
                    let setup = TensorSetup::new(&format!("{}⊗{}", a.name(), b.name()), &a, &b, &cfg)?;
                    run_checks(&setup, *filter)?
                }
            };
            let ok = results.iter().all(TheoremCheckResult::all_pass);
            let out = if cli.common.json {
                json(&results)
            } else {
                results.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            };
            Ok((out, ok))
        }
        Command::Oracle { file, name } => {
            let a = load(file, cli.common.field)?.get(name)?;
            let local = a.validate()?;
            let mut pipeline = report(&local, &cfg)?;
            pipeline.flat_certificate = None;
            let oracle = oracle_report(&build_model(&local)?)?;
            let same = pipeline == oracle;
            let out = if cli.common.json {
                json(&render::OracleComparison { algebra: a.name(), identical: same, pipeline: &pipeline, oracle: &oracle })
            } else {
                render::comparison_table(&a, &pipeline, &oracle)
            };
            Ok((out, same))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            // a closed pipe is not an error for the exit code
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
