use std::io::ErrorKind;
use std::process::ExitCode;

use billiard_cli::args::Cli;
use billiard_cli::commands::run;
use billiard_cli::CliError;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        // A closed downstream pipe (`| head`) is not a failure of ours.
        Err(CliError::Write { source, .. }) if source.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("billiard: error: {e}");
            ExitCode::FAILURE
        }
    }
}
