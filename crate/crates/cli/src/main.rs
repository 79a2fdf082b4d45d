use std::process::ExitCode;

use clap::Parser;
use crw_spectra_cli::args::Cli;
use crw_spectra_cli::{run, CliError, EXIT_FAIL, EXIT_PASS};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli, &mut std::io::stdout().lock()) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            CliError::EXIT_CODE
        }
    };
    ExitCode::from(code as u8)
}
