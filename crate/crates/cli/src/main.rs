use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superschur_cli::file::read_algebra;
use superschur_cli::verify::verify_paper;
use superschur_cli::{commands, Failure, Outcome};
use superschur_core::random::seed_from_env;

#[derive(Parser)]
#[command(
    name = "superschur",
    version,
    about = "Schur multipliers of Lie superalgebras over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the superalgebra axioms.
    Validate { path: PathBuf },
    /// Derived algebra, central series, center.
    Info { path: PathBuf },
    /// Schur multiplier from both engines.
    Multiplier {
        path: PathBuf,
        #[arg(long)]
        representatives: bool,
    },
    /// t(L), s(L) and the dimension bounds.
    Invariants { path: PathBuf },
    /// Test central lines for membership in the epicenter.
    Capability {
        path: PathBuf,
        /// Extra candidate such as `e3=1,e1=-1/2`; repeatable.
        #[arg(long = "candidate")]
        candidates: Vec<String>,
    },
    /// Place a maximal-class algebra by s(L) and fingerprint.
    Classify { path: PathBuf },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Recompute the catalog against the published values.
    VerifyPaper {
        /// Directory receiving report.txt and report.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        key: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Validate { path } => Ok(commands::validate(&read_algebra(&path)?)),
        Command::Info { path } => commands::info(&read_algebra(&path)?),
        Command::Multiplier {
            path,
            representatives,
        } => commands::multiplier(&read_algebra(&path)?, representatives),
        Command::Invariants { path } => commands::invariants(&read_algebra(&path)?),
        Command::Capability { path, candidates } => {
            commands::capability(&read_algebra(&path)?, &candidates)
        }
        Command::Classify { path } => commands::classify(&read_algebra(&path)?),
        Command::Catalog {
            action: CatalogAction::List,
        } => Ok(commands::catalog_listing()),
        Command::Catalog {
            action:
                CatalogAction::Emit {
                    key,
                    p,
                    m,
                    n,
                    output,
                },
        } => {
            let params = commands::catalog_params(p.as_deref(), m, n)?;
            let json = commands::catalog_emit(&key, &params)?;
            match output {
                Some(path) => {
                    fs::write(&path, json).map_err(|e| io_err(&path, e))?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(json)),
            }
        }
        Command::VerifyPaper { out } => {
            let report = verify_paper(seed_from_env())?;
            let text = report.to_text();
            if let Some(dir) = out {
                fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
                let txt = dir.join("report.txt");
                fs::write(&txt, &text).map_err(|e| io_err(&txt, e))?;
                let csv = dir.join("report.csv");
                fs::write(&csv, report.to_csv()).map_err(|e| io_err(&csv, e))?;
            }
            Ok(Outcome {
                text,
                code: report.exit_code(),
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
