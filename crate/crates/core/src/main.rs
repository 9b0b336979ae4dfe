use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = grsets::cli::Cli::parse();
    ExitCode::from(grsets::cli::run(cli))
}
