//! Command-line surface for the divisor-class classifier.
//!
//! Exit codes: 0 success, 1 invariant violation or runtime failure,
//! 2 usage or parse error.

mod hilbert_cmd;
mod out;
mod segre3_cmd;
mod svg;
mod veronese2_cmd;
mod verify_cmd;

use clap::{Parser, Subcommand};
use out::CliError;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "cmconic",
    version,
    about = "Classify divisor classes of Segre-Veronese semigroup rings as Cohen-Macaulay and/or conic, with exact arithmetic throughout"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Segre product of three polynomial rings: classify every class in the
    /// sufficient window
    Segre3(segre3_cmd::Args),
    /// Segre product of two Veronese subrings: CM set, conic routes, and
    /// discrepancy report
    Veronese2(veronese2_cmd::Args),
    /// Run the full verification sweep; hard invariant failures exit 1
    Verify(verify_cmd::Args),
    /// Evaluate a Hilbert-series expression and print its invariants
    Hilbert(hilbert_cmd::Args),
}

fn configure_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // wall-time knob only; all merged output is order-canonical
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<u8, CliError> = match &cli.command {
        Command::Segre3(args) => {
            configure_threads(args.threads);
            segre3_cmd::run(args).map(|_| 0)
        }
        Command::Veronese2(args) => {
            configure_threads(args.threads);
            veronese2_cmd::run(args).map(|_| 0)
        }
        Command::Verify(args) => {
            configure_threads(args.threads);
            verify_cmd::run(args)
        }
        Command::Hilbert(args) => hilbert_cmd::run(args).map(|_| 0),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
