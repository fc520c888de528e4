//! `modelcat`: check, intersect and enumerate model structures on finite
//! categories from JSON files.
//!
//! Exit status: 0 when the checked statement holds, 1 when it is refuted
//! with a witness, 2 on input or precondition errors.

mod commands;
mod input;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use modelcat::explorer::DEFAULT_BUDGET;

use commands::{Body, DiagramCheck, QuiverFormat, Report};

#[derive(Parser)]
#[command(name = "modelcat", version, about = "Model structures on finite categories")]
struct Cli {
    /// Render reports as indented text instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a category file.
    Validate { category: PathBuf },
    /// Check that left/right form a weak factorization system.
    CheckWfs { structure: PathBuf },
    /// Check the model-structure axioms for cof/fib/weq.
    CheckModel { structure: PathBuf },
    /// Run the recognition theorem on I/J/weq.
    Recognize { structure: PathBuf },
    /// Right-intersect two structures with the same fibrations and replay the proof steps.
    Intersect { first: PathBuf, second: PathBuf },
    /// Objectwise structure on diagrams of the given shape.
    Diagram {
        structure: PathBuf,
        shape: PathBuf,
        /// Second base structure for the commutation check.
        #[arg(long)]
        with: Option<PathBuf>,
        /// Checks to run (repeatable; default: all that apply).
        #[arg(long = "check", value_enum)]
        checks: Vec<DiagramCheck>,
    },
    /// List every model structure on a category.
    Enumerate {
        category: PathBuf,
        /// Scan all class triples instead of pairing weak factorization systems.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Export the Bousfield quiver of all model structures on a category.
    Quiver {
        category: PathBuf,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Json)]
        format: QuiverFormat,
        /// Certify that every same-fibration pair meets at its intersection.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Validate { category } => commands::validate(category),
        Command::CheckWfs { structure } => commands::check_wfs(structure),
        Command::CheckModel { structure } => commands::check_model(structure),
        Command::Recognize { structure } => commands::recognize(structure),
        Command::Intersect { first, second } => commands::intersect(first, second),
        Command::Diagram {
            structure,
            shape,
            with,
            checks,
        } => commands::diagram(structure, shape, with.as_deref(), checks),
        Command::Enumerate {
            category,
            naive,
            budget,
        } => commands::enumerate(category, *naive, *budget),
        Command::Quiver {
            category,
            format,
            certify,
            naive,
            budget,
        } => commands::quiver(category, *format, *certify, *naive, *budget),
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("cannot configure the thread pool")?;
    }
    let report = dispatch(&cli.command)?;
    let text = match &report.body {
        Body::Text(t) => t.clone(),
        Body::Json(v) if cli.human => render::human(v),
        Body::Json(v) => serde_json::to_string_pretty(v)? + "\n",
    };
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("{}: cannot write", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(report.holds)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
