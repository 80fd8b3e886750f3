use std::process::ExitCode;

use clap::Parser;
use tcs::{emit, execute, exit_code, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|report| {
        emit(&cli, &report, &mut std::io::stdout().lock())?;
        Ok(exit_code(&report))
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
