use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclify::corpus;
use cyclify::job::JobSpec;
use cyclify::report::to_text;
use cyclify::run::{run, Command, Outcome, EXIT_UNSUPPORTED};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cyclify", version, about = "Residues, reciprocity and cyclic symbols for Brauer classes on the projective plane")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Override the seed used for randomized certificates.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the number of certificate rounds.
    #[arg(long, global = true)]
    rounds: Option<u32>,
    /// Override the largest degree handed to the factorizer.
    #[arg(long, global = true)]
    factor_bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Residues of every symbol at every candidate point.
    Residues { input: Option<PathBuf> },
    /// Check that the product of corestricted residues is trivial.
    Reciprocity { input: Option<PathBuf> },
    /// Classify the ramification curve and move it to normal form.
    Transform { input: Option<PathBuf> },
    /// Build a cyclic symbol with prescribed residues.
    Cyclify { input: Option<PathBuf> },
    /// Normalize, construct and verify end to end.
    Pipeline { input: Option<PathBuf> },
    /// Run the built-in corpus.
    Selftest,
}

fn read_job(input: Option<&PathBuf>) -> Result<JobSpec, String> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| format!("invalid job: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, input) = match &cli.command {
        Cmd::Residues { input } => (Some(Command::Residues), input.as_ref()),
        Cmd::Reciprocity { input } => (Some(Command::Reciprocity), input.as_ref()),
        Cmd::Transform { input } => (Some(Command::Transform), input.as_ref()),
        Cmd::Cyclify { input } => (Some(Command::Cyclify), input.as_ref()),
        Cmd::Pipeline { input } => (Some(Command::Pipeline), input.as_ref()),
        Cmd::Selftest => (None, None),
    };
    let outcome = match cmd {
        None => corpus::selftest(),
        Some(cmd) => match read_job(input) {
            Ok(mut job) => {
                if let Some(s) = cli.seed {
                    job.options.seed = s;
                }
                if let Some(r) = cli.rounds {
                    job.options.rounds = r;
                }
                if let Some(b) = cli.factor_bound {
                    job.options.factor_bound = b;
                }
                run(cmd, &job)
            }
            Err(e) => Outcome { code: EXIT_UNSUPPORTED, report: json!({ "error": e, "exit_code": EXIT_UNSUPPORTED }) },
        },
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.report).expect("serializable")),
        Format::Text => print!("{}", to_text(&outcome.report)),
    }
    ExitCode::from(outcome.code as u8)
}
