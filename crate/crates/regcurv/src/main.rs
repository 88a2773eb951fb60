use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use regcurv::cli::{run, Cli};
use regcurv::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|report| {
        match &cli.out {
            Some(path) => std::fs::write(path, &report.body).map_err(|e| CliError::io(path, e))?,
            None => std::io::stdout().lock().write_all(report.body.as_bytes())?,
        }
        Ok(report.failed)
    }) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("assertion failed; see the \"failures\" field of the output");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
