//! `matrep`: command-line front end.
//!
//! Exit status: 0 when the run completed (whatever the verdict), 1 for input
//! errors, 2 when a resource limit was hit.

mod args;
mod batch;
mod commands;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut out = std::io::stdout().lock();
    match commands::run(&cli, &mut out) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
