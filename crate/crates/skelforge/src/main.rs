use std::process::ExitCode;

use clap::Parser;

use skelforge::cli::write_atomically;
use skelforge::json::to_pretty;
use skelforge::{run, Cli, CliError, ErrorJson, RunConfig};

fn execute(cli: Cli) -> Result<(), CliError> {
    let config = RunConfig::from_command(cli.command)?;
    let text = run(&config)?;
    match &config.out {
        Some(path) => write_atomically(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let usage = ErrorJson { code: "usage".into(), detail: e.to_string().trim_end().to_string() };
            eprint!("{}", to_pretty(&usage));
            return ExitCode::from(2);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprint!("{}", to_pretty(&e.to_json()));
            ExitCode::FAILURE
        }
    }
}
