use std::process::ExitCode;

use clap::Parser;
use nlpc_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let err = CliError::usage(text.strip_prefix("error: ").unwrap_or(&text).to_string());
            return report(&err);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => report(&err),
    }
}

fn report(err: &CliError) -> ExitCode {
    eprintln!("error: {}", err.message.trim_end());
    eprintln!("{}", err.to_json_line());
    ExitCode::from(err.code)
}
