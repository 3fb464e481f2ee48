//! `critshare`: batch command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation or protocol error,
//! 3 solver budget exceeded, 4 verification failed.

mod analyze;
mod args;
mod critical;
mod failure;
mod io;
mod latin;
mod lsss;
mod rsa;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use failure::Failure;

fn run(cli: Cli) -> Result<(), Failure> {
    let ctx = cli.context();
    match cli.command {
        Command::Latin(c) => latin::run(c, &ctx),
        Command::Critical(c) => critical::run(c, &ctx),
        Command::Lsss(c) => lsss::run(c, &ctx),
        Command::Rsa(c) => rsa::run(c, &ctx),
        Command::Analyze(c) => analyze::run(c, &ctx),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(failure::USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("critshare: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        super::Cli::command().debug_assert();
    }
}
