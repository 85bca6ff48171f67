//! `spectral-kit`: construct extremal graphs, compute complement spectra,
//! and verify the least-eigenvalue bounds by exhaustive search.

use clap::{Parser, Subcommand};
use spectral_kit::commands::{
    self, ClaimsArgs, CliError, ConstructArgs, SpectrumArgs, VerifyArgs,
};
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "spectral-kit",
    version,
    about = "Least eigenvalues of graph complements with given connectivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a B1/B2/B3 graph and print it
    Construct(ConstructArgs),
    /// Full adjacency spectrum of a graph or its complement
    Spectrum(SpectrumArgs),
    /// Exhaustively verify the predicted minima over an (n, kappa) grid
    Verify(VerifyArgs),
    /// Check the structural claims on a graph or on class minimizers
    Claims(ClaimsArgs),
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Construct(args) => {
            let out = commands::run_construct(&args)?;
            write_output(args.output.as_deref(), out.graph_text.trim_end())?;
            eprintln!("{}", out.summary);
            Ok(0)
        }
        Command::Spectrum(args) => {
            let text = read_input(&args.input)?;
            let report = commands::run_spectrum(&args, &text)?;
            write_output(args.output.as_deref(), &report.to_json())?;
            Ok(0)
        }
        Command::Verify(args) => {
            let out = commands::run_verify(&args)?;
            write_output(args.output.as_deref(), &out.report.to_json())?;
            if let Some(csv_path) = &args.csv {
                std::fs::write(csv_path, &out.csv).map_err(|e| {
                    CliError::Usage(format!("cannot write {}: {e}", csv_path.display()))
                })?;
            }
            Ok(if out.violation { 1 } else { 0 })
        }
        Command::Claims(args) => {
            let text = match &args.input {
                Some(path) => Some(read_input(path)?),
                None => None,
            };
            let report = commands::run_claims(&args, text.as_deref())?;
            write_output(args.output.as_deref(), &report.to_json())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
