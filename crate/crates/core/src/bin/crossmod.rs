use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use crossmod::cli::{run, Command, Format, Report, RunOptions, Workspace};
use crossmod::Limits;

/// Crossed modules, butterflies and non-abelian H¹ on JSON documents.
#[derive(Parser, Debug)]
#[command(name = "crossmod", version)]
struct Args {
    /// Document files or directories of `*.json` files.
    #[arg(short = 'i', long = "input", default_value = ".", global = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Group-order guard for automorphism, isomorphism and section searches.
    #[arg(long, global = true)]
    max_group: Option<usize>,
    /// Guard on cocycle enumeration and homotopy search spaces.
    #[arg(long, global = true)]
    max_search: Option<u128>,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut limits = Limits::default();
    if let Some(n) = args.max_group {
        limits.max_aut_order = n;
        limits.max_iso_order = n;
        limits.max_split_order = n;
    }
    if let Some(n) = args.max_search {
        limits.max_equivalence_search = n;
        limits.max_h1_search = n;
    }
    if let Some(t) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("crossmod: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match Workspace::load(&args.inputs, &limits) {
        Ok(ws) => run(
            &ws,
            &args.command,
            &RunOptions {
                limits,
                timing: args.timing,
            },
        ),
        Err(e) => {
            let mut r = Report::error(args.command.echo(), e.to_string());
            if e.is_validation() {
                r.status = crossmod::cli::Status::Fail;
            }
            r
        }
    };
    match args.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
