//! `stcore` command-line interface.
//!
//! Exit codes: 0 success, 1 usage error, 2 infinite family requested,
//! 3 verification failure.

mod args;
mod commands;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Infinite(String),
    /// The report has already been written.
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Infinite(_) => 2,
            Failure::Verification => 3,
        }
    }
}

impl From<stcore::Error> for Failure {
    fn from(e: stcore::Error) -> Self {
        match e {
            stcore::Error::InfiniteFamily { .. } => Failure::Infinite(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth an error
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {n} threads: {e}")))?;
    }
    let g = &cli.global;
    let (text, outcome) = match &cli.command {
        Command::Enumerate(a) => (commands::enumerate(a, g)?, Ok(())),
        Command::Table(a) => (commands::table(a, g)?, Ok(())),
        Command::Verify(a) => {
            let (text, pass) = commands::verify(a, g)?;
            (text, if pass { Ok(()) } else { Err(Failure::Verification) })
        }
        Command::Bijection(a) => (commands::bijection(a, g)?, Ok(())),
        Command::Render(a) => (commands::render(a, g)?, Ok(())),
    };
    emit(&g.out, &text)?;
    outcome
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) | Failure::Infinite(msg) => eprintln!("error: {msg}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(failure.code())
        }
    }
}
