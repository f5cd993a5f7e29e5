use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match chartab::cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(chartab::cli::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    chartab::cli::run(cli)
}
