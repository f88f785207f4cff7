//! `octonion` — exact verification harness for the octonion / split-octonion
//! algebra library.
//!
//! Exit codes: 0 all selected checks pass, 1 any check failed, 2 usage error
//! or unwritable output path.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use octonion_algebra::algebra::AlgebraKind;
use octonion_cli::export::{export_tensor, TensorChoice};
use octonion_cli::suites::{run, SuiteName, SuiteSelection};
use octonion_cli::table::{render_ascii, render_json};

#[derive(Parser)]
#[command(
    name = "octonion",
    version,
    about = "Exact octonion / split-octonion verification: tables, tensors, identity suite, \
             Malcev and Lie-3 axioms, super-affine mode algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    Octonion,
    Split,
    Both,
}

impl AlgebraArg {
    fn kinds(self) -> Vec<AlgebraKind> {
        match self {
            AlgebraArg::Octonion => vec![AlgebraKind::Octonion],
            AlgebraArg::Split => vec![AlgebraKind::SplitOctonion],
            AlgebraArg::Both => AlgebraKind::ALL.to_vec(),
        }
    }

    fn single(self) -> Result<AlgebraKind, String> {
        match self {
            AlgebraArg::Octonion => Ok(AlgebraKind::Octonion),
            AlgebraArg::Split => Ok(AlgebraKind::SplitOctonion),
            AlgebraArg::Both => Err("this subcommand needs a single algebra".to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Ascii,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which algebra(s) to verify.
    #[arg(long, value_enum, default_value = "both")]
    algebra: AlgebraArg,
    /// Comma-separated suites: tables,tensors,identities,malcev,lie3,fconst,
    /// superaffine, or `all`.
    #[arg(long = "suite", value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    /// Seed for the random-element trials.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random-element trials per randomized check.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Mode bound for the super-affine sweeps.
    #[arg(long = "mode-bound", default_value_t = 2)]
    mode_bound: i64,
    /// Write a JSON sidecar of the report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Self-test fixture: flip the sign of table entry I,J before the tables
    /// suite runs (expected to drive the exit code to 1).
    #[arg(long = "corrupt-table", value_name = "I,J")]
    corrupt_table: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a markdown report.
    Verify(VerifyArgs),
    /// Export a tensor (gamma, b, B, f, t, p) as JSON or CSV.
    Export {
        /// Tensor name, case sensitive: gamma, b, B, f, t, p.
        tensor: String,
        #[arg(long, value_enum, default_value = "octonion")]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        /// Output path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a multiplication table.
    Table {
        #[arg(long, value_enum, default_value = "octonion")]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "ascii")]
        format: TableFormat,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_suites(names: &[String]) -> Result<Vec<SuiteName>, String> {
    let mut out = Vec::new();
    for name in names {
        match name.as_str() {
            "all" => out.extend(SuiteName::ALL),
            other => {
                let found = SuiteName::ALL.iter().find(|s| s.name() == other);
                match found {
                    Some(&s) => out.push(s),
                    None => return Err(format!("unknown suite `{other}`")),
                }
            }
        }
    }
    out.dedup();
    Ok(out)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let suites = match parse_suites(&args.suite) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    if args.trials == 0 {
        return usage_error("--trials must be positive");
    }
    if args.mode_bound < 1 {
        return usage_error("--mode-bound must be at least 1");
    }
    let corrupt_entry = match &args.corrupt_table {
        None => None,
        Some(spec) => {
            let parts: Vec<&str> = spec.split(',').collect();
            let parsed = (|| {
                if parts.len() != 2 {
                    return None;
                }
                let i: usize = parts[0].trim().parse().ok()?;
                let j: usize = parts[1].trim().parse().ok()?;
                (i < 8 && j < 8).then_some((i, j))
            })();
            match parsed {
                Some(p) => Some(p),
                None => return usage_error("--corrupt-table expects `I,J` with 0 <= I,J <= 7"),
            }
        }
    };
    let selection = SuiteSelection {
        algebras: args.algebra.kinds(),
        suites,
        seed: args.seed,
        trials: args.trials,
        mode_bound: args.mode_bound,
        corrupt_entry,
    };
    let report = run(&selection);
    print!("{}", report.to_markdown());
    if let Some(path) = args.json {
        if let Err(e) = std::fs::write(&path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Export {
            tensor,
            algebra,
            format,
            out,
        } => {
            let kind = match algebra.single() {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let choice = match TensorChoice::parse(&tensor) {
                Some(c) => c,
                None => {
                    return usage_error(&format!(
                        "unknown tensor `{tensor}` (expected gamma, b, B, f, t, p)"
                    ))
                }
            };
            let export = export_tensor(kind, choice);
            let payload = match format {
                ExportFormat::Json => export.to_json(),
                ExportFormat::Csv => export.to_csv(),
            };
            match out {
                None => {
                    let mut stdout = std::io::stdout().lock();
                    if stdout.write_all(payload.as_bytes()).is_err() {
                        return ExitCode::from(2);
                    }
                    ExitCode::SUCCESS
                }
                Some(path) => match std::fs::write(&path, payload) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        ExitCode::from(2)
                    }
                },
            }
        }
        Command::Table { algebra, format } => {
            let kind = match algebra.single() {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let payload = match format {
                TableFormat::Ascii => render_ascii(kind),
                TableFormat::Json => render_json(kind),
            };
            print!("{payload}");
            ExitCode::SUCCESS
        }
    }
}
