//! Command-line front end: argument handling, parallel sample reduction and
//! JSON / CSV reports over [`tcs_core`].

pub mod args;
pub mod commands;
pub mod error;
pub mod par;
pub mod report;

use std::io::Write;

pub use args::{Cli, Command, Format, RunArgs, RunConfig};
pub use error::CliError;
pub use report::{Outcome, Report, VerdictEntry};

/// Runs a parsed command line and returns its report.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let config = cli.run.config()?;
    let ctx = commands::Context::new(config);
    match cli.run.threads {
        Some(t) if !cli.run.deterministic => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build()?;
            pool.install(|| commands::run(&cli.command, &ctx))
        }
        _ => commands::run(&cli.command, &ctx),
    }
}

/// Renders `report` in the requested format to `--out` or `out`.
pub fn emit(cli: &Cli, report: &Report, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cli.run.output {
        Format::Json => report.to_json()?,
        Format::Csv => report.to_csv()?,
    };
    match &cli.run.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Exit status for a finished report.
pub fn exit_code(report: &Report) -> i32 {
    i32::from(report.failed())
}
