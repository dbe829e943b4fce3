mod args;
mod commands;
mod error;
mod output;
mod svg;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliError;
use crate::output::Printer;

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out = Printer::new(cli.out.as_deref(), cli.machine, cli.precision).map_err(|e| {
        let path = cli.out.as_deref().unwrap_or("-".as_ref()).display();
        CliError::Runtime(format!("{path}: {e}"))
    })?;
    match &cli.command {
        Command::Prob(a) => commands::prob(a, &mut out)?,
        Command::Scan(a) => commands::scan(a, &mut out)?,
        Command::Limits(a) => commands::limits(a, &mut out)?,
        Command::Extrema(a) => commands::extrema(a, &mut out)?,
        Command::Cycles(a) => commands::cycles(a, &mut out)?,
        Command::Analyze(a) => commands::analyze(a, &mut out)?,
    }
    out.finish()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
