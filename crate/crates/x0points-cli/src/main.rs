//! Command-line front end for the X_0(N) degree-5 classification engine.
//!
//! Exit codes: 0 on success, 2 on any divergence from an expected
//! (cited) result, 3 on a data-availability failure (snapshot miss or
//! network error).

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use x0points::classify::Engine;
use x0points::error::{ClassifyError, IngestError};
use x0points::ingest::LmfdbClient;
use x0points::report;

#[derive(Parser)]
#[command(name = "x0points", version, about = "degree-5 points on X_0(N)")]
struct Cli {
    /// Never touch the network; replay the snapshot only.
    #[arg(long, global = true, default_value_t = true)]
    offline: bool,

    /// Use this snapshot file instead of the bundled one.
    #[arg(long, global = true)]
    snapshot: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Include the proof trace in classification output.
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single level or a range of levels.
    Classify {
        #[arg(long, conflicts_with = "range")]
        level: Option<u64>,
        /// Inclusive range "A..B".
        #[arg(long)]
        range: Option<String>,
    },
    /// Reproduce one of the named classification reports.
    Report {
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
    /// Run an exclusion sweep.
    Sweep {
        /// Sweep the pentaelliptic exclusion.
        #[arg(long)]
        pentaelliptic: bool,
        /// Largest level to include.
        #[arg(long, default_value_t = 467)]
        max: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Density5,
    Quintic,
    Table1,
    Candidates,
    CsTables,
}

fn build_engine(cli: &Cli) -> Result<Engine, ClassifyError> {
    let mut client = match &cli.snapshot {
        Some(path) => LmfdbClient::with_snapshot(path, cli.offline).map_err(ClassifyError::Ingest)?,
        None => LmfdbClient::offline(),
    };
    client.offline = cli.offline;
    Engine::prepare(&mut client)
}

fn run(cli: &Cli) -> Result<report::Report, ClassifyError> {
    let engine = build_engine(cli)?;
    match &cli.command {
        Command::Classify { level, range } => {
            let (lo, hi) = match (level, range) {
                (Some(n), _) => (*n, *n),
                (None, Some(r)) => {
                    let (a, b) = r
                        .split_once("..")
                        .ok_or_else(|| ClassifyError::Divergence("range must be A..B".into()))?;
                    (
                        a.trim().parse().map_err(|_| {
                            ClassifyError::Divergence("bad range start".into())
                        })?,
                        b.trim().parse().map_err(|_| {
                            ClassifyError::Divergence("bad range end".into())
                        })?,
                    )
                }
                (None, None) => {
                    return Err(ClassifyError::Divergence(
                        "classify needs --level or --range".into(),
                    ))
                }
            };
            let verdicts = engine.classify_range(lo, hi)?;
            Ok(report::render_range(&verdicts, cli.trace))
        }
        Command::Report { theorem } => match theorem {
            Theorem::Candidates => report::report_candidates(&engine),
            Theorem::Density5 => report::report_density5(&engine),
            Theorem::Quintic => report::report_quintic(&engine),
            Theorem::Table1 => report::report_table1(&engine),
            Theorem::CsTables => report::report_cs_tables(&engine),
        },
        Command::Sweep { pentaelliptic, max } => {
            if !pentaelliptic {
                return Err(ClassifyError::Divergence(
                    "only --pentaelliptic sweeps are implemented".into(),
                ));
            }
            Ok(report::report_sweep(&engine, *max))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            match cli.format {
                Format::Text => println!("{}", rep.to_text()),
                Format::Json => println!("{}", rep.to_json()),
            }
            if rep.diverged {
                eprintln!("divergence from an expected result");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(ClassifyError::Ingest(e)) => {
            eprintln!("data unavailable: {}", e);
            let _ = matches!(e, IngestError::SnapshotMiss(_));
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("divergence: {}", e);
            ExitCode::from(2)
        }
    }
}
