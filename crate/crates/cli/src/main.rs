mod args;
mod classify;
mod error;
mod json;
mod reduce;
mod table;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use args::{Cli, Command, Format};
use clap::error::ErrorKind;
use clap::Parser;
use error::CliError;
use serde_json::Value;

/// A rendered command result. `exit` is nonzero when the command ran but
/// found a hard failure.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl Report {
    pub fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            exit: 0,
        }
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Verify(a) => verify::run(a),
        Command::Classify(a) => classify::run(a),
        Command::Reduce(a) => reduce::run(a),
        Command::Table(a) => table::run(a),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return ExitCode::from(code);
        }
    };
    let outcome = run(&cli);
    let (body, code) = match (&outcome, cli.format) {
        (Ok(r), Format::Text) => (r.text.clone(), r.exit),
        (Ok(r), Format::Json) => (json::render(&r.json), r.exit),
        (Err(e), Format::Json) => (json::render(&e.to_json()), e.exit_code()),
        (Err(e), Format::Text) => {
            eprintln!("error ({}): {e}", e.kind());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error ({}): {e}", e.kind());
        return ExitCode::from(e.exit_code() as u8);
    }
    ExitCode::from(code as u8)
}
