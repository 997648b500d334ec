use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gammadist::cli::Cli;
use gammadist::job::{run, Outcome, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.to_job() {
        Ok(job) => run(&job),
        Err(e) => Outcome {
            status: Status::Error,
            document: e.to_json(),
        },
    };
    let text = match serde_json::to_string_pretty(&outcome.document) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("cannot serialise output: {e}");
            return ExitCode::from(1);
        }
    };
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(outcome.status.code())
}
