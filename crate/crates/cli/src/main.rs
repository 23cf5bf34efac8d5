//! `kummer`: command-line front end for `kummer-core`.
//!
//! Exit status: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 a verification or comparison failed, 4 an enumeration budget was hit.

mod cli;
mod hodge;
mod invariants;
mod report;
mod toric;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use kummer_core::orbifold::Parallelism;

use cli::{Cli, Command};
use report::{CliError, Report};

pub(crate) fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let par = match cli.threads {
        0 => Parallelism::Global,
        1 => Parallelism::Sequential,
        t => Parallelism::Threads(t),
    };
    match &cli.command {
        Command::Hodge(a) => hodge::hodge(a, cli.format, par, hodge::View::Grid),
        Command::Diamond(a) => hodge::hodge(a, cli.format, par, hodge::View::Diamond),
        Command::Euler(a) => hodge::euler(a, cli.format, par),
        Command::Toric(c) => toric::run(c, cli.format),
        Command::Invariants(c) => invariants::run(c, cli.format),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(body.as_bytes());
            let _ = stdout.flush();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("kummer: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Err(e) = emit(&cli, &report.body) {
        eprintln!("kummer: {e}");
        return ExitCode::from(e.exit_code());
    }
    if let Some(f) = &report.failure {
        eprintln!("kummer: verification failed: {f}");
    }
    report.exit_code()
}
