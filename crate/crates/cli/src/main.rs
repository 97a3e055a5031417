use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sll_cli::commands::{self, LatticeOptions, VerifyOptions};
use sll_cli::output::write_atomic;
use sll_cli::{CliError, InstanceFile, Kind, ReportDocument, Suite};
use sll_core::lattice::Labels;
use sll_core::{FieldSpec, OracleBounds};

#[derive(Parser)]
#[command(name = "sll", version, about = "Canonical decompositions of two pairs of supplementary subspaces")]
struct Cli {
    /// Print a plain-text report instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Also write the report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelArg {
    Dims,
    Bases,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical split, chains and θ for V1, V2, W1, W2.
    Decompose { path: PathBuf },
    /// Close the named subspaces under sum and intersection.
    Lattice {
        path: PathBuf,
        /// Write the Hasse diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Legend mapping DOT nodes to bases (default: <dot>.legend.tsv).
        #[arg(long)]
        legend: Option<PathBuf>,
        /// Element cap (default: $SLL_MAX_ELEMENTS or 10000).
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        allow_truncated: bool,
        #[arg(long, value_enum, default_value = "dims")]
        labels: LabelArg,
    },
    /// Run every applicable theorem check.
    Verify {
        path: PathBuf,
        #[arg(long, default_value = "all", value_parser = ["twosum", "reflexive", "representation", "curvature", "all"])]
        suite: String,
        /// Treat the curvature algebra as indecomposable when the search is infeasible.
        #[arg(long)]
        assert_indecomposable: bool,
        #[arg(long, default_value_t = OracleBounds::default().max_dim)]
        oracle_max_dim: usize,
        #[arg(long, default_value_t = OracleBounds::default().max_prime)]
        oracle_max_prime: u64,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Write a seeded random instance.
    Random {
        /// `q` or `gf:p` for an odd prime p.
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "twosum", value_parser = ["twosum", "reflexive", "curvature"])]
        kind: String,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<sll_cli::Instance, CliError> {
    InstanceFile::read(path)?.resolve()
}

fn max_elements(flag: Option<usize>) -> Result<usize, CliError> {
    match flag {
        Some(m) => Ok(m),
        None => commands::default_max_elements(),
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn print_out(text: &str) -> Result<(), CliError> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
            path: "<stdout>".into(),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn emit(cli: &Cli, doc: &ReportDocument) -> Result<(), CliError> {
    let json = doc.to_json();
    if cli.text {
        print_out(&doc.to_string())?;
    } else {
        print_out(&format!("{json}\n"))?;
    }
    if let Some(path) = &cli.report {
        write_atomic(path, &(json + "\n"))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Decompose { path } => {
            let doc = commands::decompose(&load(path)?)?;
            emit(cli, &doc)?;
            Ok(doc.exit_code(false))
        }
        Command::Lattice {
            path,
            dot,
            legend,
            max,
            allow_truncated,
            labels,
        } => {
            let labels = match labels {
                LabelArg::Dims => Labels::Dims,
                LabelArg::Bases => Labels::Bases,
            };
            let opts = LatticeOptions {
                max_elements: max_elements(*max)?,
                labels,
            };
            let out = commands::lattice(&load(path)?, opts)?;
            if let Some(dot) = dot {
                write_atomic(dot, &out.dot)?;
                let legend = legend.clone().unwrap_or_else(|| {
                    let mut p = dot.clone().into_os_string();
                    p.push(".legend.tsv");
                    p.into()
                });
                write_atomic(&legend, &out.legend)?;
            }
            emit(cli, &out.report)?;
            Ok(out.report.exit_code(*allow_truncated))
        }
        Command::Verify {
            path,
            suite,
            assert_indecomposable,
            oracle_max_dim,
            oracle_max_prime,
            max,
        } => {
            let opts = VerifyOptions {
                suite: suite.parse::<Suite>()?,
                max_elements: max_elements(*max)?,
                bounds: OracleBounds {
                    max_dim: *oracle_max_dim,
                    max_prime: *oracle_max_prime,
                },
                assert_indecomposable: *assert_indecomposable,
            };
            let doc = commands::verify(&load(path)?, opts)?;
            emit(cli, &doc)?;
            Ok(doc.exit_code(false))
        }
        Command::Random {
            field,
            dim,
            seed,
            kind,
            out,
        } => {
            let field: FieldSpec = field.parse()?;
            let file = commands::random(field, *dim, *seed, kind.parse::<Kind>()?)?;
            let text = file.to_canonical_json();
            match out {
                Some(path) => write_atomic(path, &text)?,
                None => print_out(&text)?,
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
