use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use calibra_cli::commands::{self, Standard};
use calibra_cli::doc::{FormDocument, VectorsDocument};
use calibra_cli::report::Report;
use calibra_cli::CliError;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

/// Calibrated geometries in dimensions 7 and 8: metric recovery,
/// subspace classification, form decomposition and identity checks.
#[derive(Parser)]
#[command(name = "calibra", version)]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "phi7")]
    Phi7,
    #[value(name = "psi7")]
    Psi7,
    #[value(name = "Phi8")]
    Phi8,
}

#[derive(Subcommand)]
enum Command {
    /// Print a standard form as a form document.
    Standard {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Recover metric and orientation from a 3-form (dim 7) or 4-form (dim 8).
    Recover {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Classify the span of a list of vectors.
    Classify {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        basis: PathBuf,
    },
    /// Split a form into its type components.
    Decompose {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        form: PathBuf,
    },
    /// Run a randomized identity suite.
    Verify {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    commands::parse(&text)
}

fn run(command: &Command) -> (&'static str, Option<u64>, Result<Value, CliError>) {
    match command {
        Command::Standard { which } => {
            let which = match which {
                Which::Phi7 => Standard::Phi7,
                Which::Psi7 => Standard::Psi7,
                Which::Phi8 => Standard::Phi8,
            };
            let doc = commands::standard(which);
            ("standard", None, serde_json::to_value(doc).map_err(CliError::from))
        }
        Command::Recover { input } => ("recover", None, read(input).and_then(|d: FormDocument| commands::recover(&d))),
        Command::Classify { structure, basis } => (
            "classify",
            None,
            read(structure).and_then(|s: FormDocument| commands::classify(&s, &read::<VectorsDocument>(basis)?)),
        ),
        Command::Decompose { structure, form } => (
            "decompose",
            None,
            read(structure).and_then(|s: FormDocument| commands::decompose(&s, &read::<FormDocument>(form)?)),
        ),
        Command::Verify {
            structure,
            suite,
            seed,
            trials,
        } => {
            let result = read(structure)
                .and_then(|s: FormDocument| commands::verify(&s, suite, *seed, *trials))
                .and_then(|r| {
                    if r.max_residual <= commands::SUITE_TOLERANCE {
                        Ok(r.payload)
                    } else {
                        Err(CliError::validation(
                            "SuiteFailed",
                            format!("max residual {:e} exceeds {:e}", r.max_residual, commands::SUITE_TOLERANCE),
                        ))
                    }
                });
            ("verify", Some(*seed), result)
        }
    }
}

fn to_value(r: Report) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, seed, result) = run(&cli.command);
    let (report, code) = match result {
        // a standard form is printed bare, so it can be fed back in as a structure
        Ok(payload) if name == "standard" => (payload, 0),
        Ok(payload) => (to_value(Report::ok(name, payload, seed)), 0),
        Err(e) => {
            eprintln!("calibra {name}: {e}");
            (to_value(Report::failed(name, &e, Value::Null, seed)), e.exit_code())
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text + "\n") {
                eprintln!("calibra: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(code as u8)
}
