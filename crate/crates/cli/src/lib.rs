//! Command-line front end: constructions, spectra, bound checks, searches and sweeps.
//!
//! Exit status: 0 on success, 1 when a bound verdict fails, 2 on usage or domain errors.

mod args;
mod commands;
mod input;
mod report;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Format};
pub use input::parse_csv;
pub use report::{fmt_f64, to_json};

use args::Threads;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs one invocation against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Runs one invocation, writing the report to `stdout` and diagnostics to `stderr`.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<i32> {
    for w in commands::warnings(&cli.command) {
        writeln!(stderr, "{w}")?;
    }
    let start = Instant::now();
    let outcome = match cli.global.threads {
        Threads::Auto => commands::execute(&cli.command, &cli.global)?,
        Threads::Count(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            pool.install(|| commands::execute(&cli.command, &cli.global))?
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let rendered = outcome.render(cli.global.format(), elapsed_ms)?;
    match &cli.global.out {
        Some(path) => fs::write(path, rendered)?,
        None => stdout.write_all(rendered.as_bytes())?,
    }
    Ok(if outcome.violated {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}
